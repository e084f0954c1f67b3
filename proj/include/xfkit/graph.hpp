#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xfkit/rational.hpp"

namespace xfkit {

using Node = int;
using Edge = std::pair<Node, Node>;

/// Edge coordinates of the complete graph K_n on nodes 1..n, ordered
/// lexicographically by (min, max), together with a terminal set T.
class EdgeSpace {
 public:
  EdgeSpace(int n, std::vector<Node> terminals);
  /// T = all nodes
  static EdgeSpace all_terminals(int n);

  int n() const { return n_; }
  std::size_t edge_count() const { return static_cast<std::size_t>(n_) * (n_ - 1) / 2; }
  const std::vector<Node>& terminals() const { return terminals_; }
  bool is_terminal(Node v) const;
  std::uint64_t terminal_mask() const { return terminal_mask_; }

  std::size_t index(Node u, Node v) const;
  Edge edge(std::size_t index) const { return edges_.at(index); }
  std::string edge_label(std::size_t index) const;
  std::vector<std::string> edge_labels() const;

  /// Indices of the edges with exactly one endpoint in `shore`.
  std::vector<std::size_t> cut(const std::vector<Node>& shore) const;
  /// Indices of the edges with both endpoints in `nodes`.
  std::vector<std::size_t> induced(const std::vector<Node>& nodes) const;

  /// Parses "12,34" (single-digit nodes) or "1-2,3-4" into sorted edge indices.
  std::vector<std::size_t> parse_edges(std::string_view text) const;

 private:
  void check_node(Node v) const;

  int n_;
  std::vector<Node> terminals_;
  std::uint64_t terminal_mask_ = 0;
  std::vector<Edge> edges_;
};

enum class SubsetKind { generic, tjoin, tcut, matching };

struct EdgeSubset {
  SubsetKind kind = SubsetKind::generic;
  std::vector<std::size_t> edges;  // sorted edge indices
  std::vector<Node> shore;         // canonical shore S (contains node 1) for cuts

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) { return a.edges == b.edges; }
};

/// Brute-force enumerations over all edge subsets are refused above this n.
inline constexpr int kEnumerationCap = 7;

/// Distinct cuts delta(S) with |S & T| odd, canonical shore containing node 1,
/// ordered by shore bitmask.
std::vector<EdgeSubset> enumerate_tcuts(const EdgeSpace& space);
/// Inclusion-minimal T-joins (parity exactly at T, acyclic), sorted by edge list.
std::vector<EdgeSubset> enumerate_minimal_tjoins(const EdgeSpace& space);
std::vector<EdgeSubset> enumerate_perfect_matchings(const EdgeSpace& space);

bool is_tjoin(const EdgeSpace& space, const std::vector<std::size_t>& edges);
bool is_minimal_tjoin(const EdgeSpace& space, const std::vector<std::size_t>& edges);
bool is_acyclic(const EdgeSpace& space, const std::vector<std::size_t>& edges);

Vector characteristic_vector(const EdgeSpace& space, const std::vector<std::size_t>& edges);
inline Vector characteristic_vector(const EdgeSpace& space, const EdgeSubset& subset) {
  return characteristic_vector(space, subset.edges);
}

std::string format_edges(const EdgeSpace& space, const std::vector<std::size_t>& edges);
std::string format_nodes(const std::vector<Node>& nodes);
/// Parses "1,2,3" or "all" (all nodes of K_n).
std::vector<Node> parse_nodes(std::string_view text, int n);

}  // namespace xfkit
