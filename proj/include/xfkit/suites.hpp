#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xfkit/graph.hpp"
#include "xfkit/verifier.hpp"

namespace xfkit {

/// Instance selection shared by all named suites.
struct SuiteConfig {
  int n = 4;
  std::vector<Node> terminals;          // empty: every node is a terminal
  std::optional<std::vector<Node>> u1;  // q-equals-qtilde
  std::optional<std::string> join;      // fm-equals-gm, ve-radial-cone
  std::optional<std::string> edge;      // fm-equals-gm

  EdgeSpace space() const;
};

/// Every suite name accepted by run_suite, in the order all-desk-scale runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all-desk-scale"). Reports come back in a fixed
/// order; LP checks inside a report fan out over default_workers().
/// Throws MalformedInput for an unknown name.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteConfig& config);

/// Wraps a check that is expected to fail: verified iff `inner` is refuted
/// and its evidence replays.
VerificationReport expect_refuted(const std::string& claim, const VerificationReport& inner);

}  // namespace xfkit
