// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// (zero tolerance); the only numeric tolerances are the wall-clock limits.
//
// usage: acceptance [path/to/xfkit]   (the CLI is needed for criterion 10)

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "xfkit/double_description.hpp"
#include "xfkit/extension.hpp"
#include "xfkit/polyhedral_model.hpp"
#include "xfkit/suites.hpp"
#include "xfkit/verifier.hpp"

using namespace xfkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
  void require(const VerificationReport& r) {
    require(r.verified() && replay(r), r.claim + " [" + to_string(r.status) + "] " + r.detail.substr(0, 160));
  }
  void require_all(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) require(r);
  }
};

VPolyhedron subsets_dominant(const EdgeSpace& s, const std::vector<EdgeSubset>& subsets) {
  VPolyhedron v(s.edge_count());
  for (const auto& x : subsets) v.add_vertex(characteristic_vector(s, x));
  v.add_unit_rays();
  return dominant(v);
}

SuiteConfig config(int n, std::vector<Node> terminals = {}) {
  SuiteConfig c;
  c.n = n;
  c.terminals = std::move(terminals);
  return c;
}

Outcome crit1() {
  Outcome o;
  const std::vector<EdgeSpace> spaces{EdgeSpace::all_terminals(4), EdgeSpace(4, {1, 2}), EdgeSpace(5, {1, 2, 3, 4})};
  std::size_t certs = 0;
  for (const auto& s : spaces) {
    const HPolyhedron target = tjoin_dominant_h(s);
    const auto r = verify_extension_projects_to(tjoin_dominant_extension(s), target, h_to_v(target),
                                                "n=" + std::to_string(s.n()) + " T=" + format_nodes(s.terminals()));
    o.require(r);
    certs += r.certificates.size();
  }
  o.detail = "3 instances, " + std::to_string(certs) + " certificates replayed";
  return o;
}

Outcome crit2() {
  Outcome o;
  std::size_t claims = 0;
  for (const SuiteConfig& c : {config(4), config(4, {1, 2}), config(5, {1, 2, 3, 4}), config(6)}) {
    const auto reports = run_suite("sizes", c);
    o.require_all(reports);
    claims += reports.size();
  }
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const auto ext = tjoin_dominant_extension(s);
  o.require(ext.size() == 114, "V4-join dominant formulation has " + std::to_string(ext.size()) + " rows");
  o.require(tjoin_flow_piece(s, {{1, 2}}).size() == 3 * s.edge_count(), "piece size 3|E|");
  o.detail = std::to_string(claims) + " size claims over 4 instances; V4 dominant = " + std::to_string(ext.size());
  return o;
}

Outcome crit3() {
  Outcome o;
  const auto r4 = run_suite("ve-radial-cone", config(4));
  o.require(r4.size() == 7, "7 minimal V4-joins");
  o.require_all(r4);
  SuiteConfig c6 = config(6);
  c6.join = "12,34,56";
  o.require_all(run_suite("ve-radial-cone", c6));
  o.detail = std::to_string(r4.size()) + " V4-joins and the K6 matching {12,34,56}";
  return o;
}

Outcome crit4() {
  Outcome o;
  const auto reports = run_suite("fm-equals-gm", config(4));
  o.require(reports.size() == 18, "18 pairs (J, m)");
  o.require_all(reports);
  o.detail = std::to_string(reports.size()) + " pairs (J, m)";
  return o;
}

Outcome crit5() {
  Outcome o;
  const auto lemma = run_suite("structure-lemma", config(4));
  const auto transfer = run_suite("dual-transfer", config(4));
  o.require(lemma.size() == 11 && transfer.size() == 11, "7 + 4 vertices of the K4 dominants");
  o.require_all(lemma);
  o.require_all(transfer);
  const EdgeSpace s6 = EdgeSpace::all_terminals(6);
  const auto cuts = enumerate_tcuts(s6);
  o.require(cuts.size() == 16, "16 odd cuts of K6");
  const VPolyhedron cut_dominant = subsets_dominant(s6, cuts);
  for (const auto& k : cuts) {
    const Vector v = characteristic_vector(s6, k);
    o.require(verify_structure_lemma(cut_dominant, v));
    o.require(verify_dual_transfer(cut_dominant, v));
  }
  o.detail = "11 K4 vertices and " + std::to_string(cuts.size()) + " K6 odd cuts, both parts and both directions";
  return o;
}

Outcome crit6() {
  Outcome o;
  const auto r4 = run_suite("q-equals-qtilde", config(4));
  const auto r6 = run_suite("q-equals-qtilde", config(6));
  o.require(r4.size() == 4 && r6.size() == 16, "4 + 16 odd-cut vertices");
  o.require_all(r4);
  o.require_all(r6);
  for (const auto& r : r6)
    o.require(r.detail.find("blocks partition") != std::string::npos, r.claim + " lacks the block check");
  o.detail = std::to_string(r4.size()) + " shores at n=4, " + std::to_string(r6.size()) + " at n=6, product blocks checked";
  return o;
}

Outcome crit7() {
  Outcome o;
  VPolyhedron pair(2);
  pair.add_vertex({1, 0});
  pair.add_vertex({0, 1});
  pair.add_unit_rays();
  o.require(verify_blocker_involution(pair));
  o.require_all(run_suite("blocker-involution", config(4)));
  std::size_t instances = 0;
  for (int n = 2; n <= 6; ++n) {
    std::vector<Node> t;
    for (Node v = 1; v <= n - n % 2; ++v) t.push_back(v);
    o.require_all(run_suite("blocking-duality", config(n, t)));
    ++instances;
    if (n >= 4) {
      o.require_all(run_suite("blocking-duality", config(n, {1, 2})));
      ++instances;
    }
  }
  o.detail = "2D pair and both K4 dominants; duality at " + std::to_string(instances) + " instances with n <= 6";
  return o;
}

Outcome crit8() {
  Outcome o;
  const auto commutes = run_suite("projection-commutes", config(4));
  const auto faces = run_suite("face-radial-cone", config(4));
  o.require_all(commutes);
  o.require_all(faces);
  o.require(faces.size() == 3, "3 perfect matchings of K4");

  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const auto ext = tjoin_dominant_extension(s);
  std::vector<Row> degree;
  for (Node t : s.terminals()) degree.push_back(Row(SparseVector::from_dense(characteristic_vector(s, s.cut({t}))), 1));
  const auto face = face_extension(ext, degree);
  o.require(face.size() <= ext.size(), "face extension is no larger");
  const HPolyhedron face_h = face_restrict(tjoin_dominant_h(s), degree);
  o.require(verify_extension_projects_to(face, face_h, h_to_v(face_h), "face of the flow formulation"));
  o.detail = std::to_string(commutes.size()) + " commutation checks, " + std::to_string(faces.size()) +
             " face radial cones, matching face of size " + std::to_string(face.size());
  return o;
}

Outcome crit9() {
  Outcome o;
  const auto reports = run_suite("mutations", config(4));
  int cut = 0, capacity = 0, piece = 0;
  for (const auto& r : reports) {
    cut += r.claim.find("deleted row") != std::string::npos;
    capacity += r.claim.find("capacity row") != std::string::npos;
    piece += r.claim.find("only pieces") != std::string::npos;
  }
  o.require(cut > 0 && capacity > 0 && piece > 0, "all three mutation kinds present");
  o.require_all(reports);
  o.detail = std::to_string(cut) + " cut-row, " + std::to_string(capacity) + " capacity-row and " +
             std::to_string(piece) + " missing-piece mutations refuted with replayed witnesses";
  return o;
}

std::string run_command(const std::string& cmd, int& status) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  status = pclose(pipe.release());
  return out;
}

Outcome crit10(const std::string& cli) {
  Outcome o;
  std::size_t claims = 0;
  for (const auto& r : run_suite("all-desk-scale", config(4))) {
    ++claims;
    std::string lower = r.claim;
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    o.require(lower.find("lower bound") == std::string::npos, "claim mentions a lower bound: " + r.claim);
  }
  if (cli.empty()) {
    o.require(false, "no CLI path given");
    return o;
  }
  int status = 0;
  const std::string out = run_command("'" + cli + "' report-sizes --n-min 4 --n-max 6", status);
  o.require(status == 0, "report-sizes exit status " + std::to_string(status));
  o.require(out.find("upper bounds on facet counts") != std::string::npos, "report-sizes lacks the upper-bound label");
  o.require(out.find("No lower bounds are computed") != std::string::npos, "report-sizes lacks the lower-bound note");
  o.detail = std::to_string(claims) + " desk-scale claims, none about lower bounds; size table labelled";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "flow formulation projects onto the T-join dominant", 120, crit1},
      {2, "size bookkeeping", 600, crit2},
      {3, "VE radial cones at every V4-join and a K6 matching", 600, crit3},
      {4, "F_m = G_m for all (J, m) at n=4", 600, crit4},
      {5, "structure lemma and dual transfer at dominant vertices", 600, crit5},
      {6, "Q = Q~ at every odd-cut vertex, n=4 and n=6", 600, crit6},
      {7, "blocker involution and blocking duality", 600, crit7},
      {8, "projection commutation and face properties at n=4", 600, crit8},
      {9, "mutations are refuted with replayable witnesses", 600, crit9},
      {10, "no lower-bound claims; sizes labelled as upper bounds", 600, [&] { return crit10(cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      o.pass = false;
      o.problems.push_back("took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " (" << seconds
         << " s, limit " << c.limit_seconds << " s, exact)";
    std::cout << line.str() << std::endl;
    for (const auto& p : o.problems) std::cout << "     " << p << std::endl;
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
