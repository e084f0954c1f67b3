#include "xfkit/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "xfkit/double_description.hpp"
#include "xfkit/errors.hpp"
#include "xfkit/extension.hpp"
#include "xfkit/polyhedral_model.hpp"

namespace xfkit {

namespace {

using Reports = std::vector<VerificationReport>;

VPolyhedron subsets_dominant(const EdgeSpace& s, const std::vector<EdgeSubset>& subsets) {
  VPolyhedron v(s.edge_count());
  for (const auto& x : subsets) v.add_vertex(characteristic_vector(s, x));
  v.add_unit_rays();
  return dominant(v);
}

VPolyhedron join_dominant_v(const EdgeSpace& s) { return subsets_dominant(s, enumerate_minimal_tjoins(s)); }
VPolyhedron cut_dominant_v(const EdgeSpace& s) { return subsets_dominant(s, enumerate_tcuts(s)); }

VerificationReport named(VerificationReport r, const std::string& claim) {
  r.claim = claim;
  return r;
}

std::vector<std::vector<std::size_t>> selected_joins(const SuiteConfig& c, const EdgeSpace& s) {
  if (c.join) return {s.parse_edges(*c.join)};
  std::vector<std::vector<std::size_t>> out;
  for (const auto& j : enumerate_minimal_tjoins(s)) out.push_back(j.edges);
  return out;
}

Reports suite_tjoin_dominant(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  const auto ext = tjoin_dominant_extension(s);
  return {verify_extension_projects_to(ext, tjoin_dominant_h(s), join_dominant_v(s),
                                       "T-join flow formulation projects onto the T-join dominant")};
}

Reports suite_tcut_dominant(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  const auto ext = tcut_dominant_extension(s);
  return {verify_extension_projects_to(ext, tcut_dominant_h(s), cut_dominant_v(s),
                                       "T-cut formulation projects onto the T-cut dominant")};
}

Reports suite_ve_radial_cone(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  const HPolyhedron dom = tjoin_dominant_h(s);
  Reports out;
  for (const auto& j : selected_joins(c, s)) {
    const HPolyhedron k = radial_cone_h(dom, characteristic_vector(s, j));
    out.push_back(verify_extension_projects_to(ve_radial_cone_extension(s, j), k, h_to_v(k),
                                               "VE radial cone at " + format_edges(s, j)));
  }
  return out;
}

Reports suite_nonvertex(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  const HPolyhedron dom = tjoin_dominant_h(s);
  const auto joins = enumerate_minimal_tjoins(s);
  std::vector<std::pair<std::string, Vector>> points;
  const Vector a = characteristic_vector(s, joins.front());
  if (joins.size() > 1) {
    const Vector b = characteristic_vector(s, joins[1]);
    Vector mid(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mid[i] = (a[i] + b[i]) / Rational(2);
    points.emplace_back("midpoint of " + format_edges(s, joins.front().edges) + " and " +
                            format_edges(s, joins[1].edges),
                        mid);
  }
  Vector up = a;
  up.back() += 1;
  points.emplace_back(format_edges(s, joins.front().edges) + " plus a unit ray", up);
  points.emplace_back("all-twos point", Vector(a.size(), Rational(2)));
  Reports out;
  for (const auto& [label, v] : points) {
    const HPolyhedron k = radial_cone_h(dom, v);
    out.push_back(verify_extension_projects_to(nonvertex_radial_cone_extension(s, v), k, h_to_v(k),
                                               "non-vertex radial cone at " + label));
  }
  return out;
}

Reports suite_radial_identity(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  Reports out;
  const HPolyhedron jd = tjoin_dominant_h(s), cd = tcut_dominant_h(s);
  for (const auto& j : enumerate_minimal_tjoins(s))
    out.push_back(named(verify_radial_cone_identity(jd, characteristic_vector(s, j)),
                        "radial cone identity, T-join dominant at " + format_edges(s, j.edges)));
  for (const auto& k : enumerate_tcuts(s))
    out.push_back(named(verify_radial_cone_identity(cd, characteristic_vector(s, k)),
                        "radial cone identity, T-cut dominant at " + format_edges(s, k.edges)));
  return out;
}

template <typename Op>
Reports at_dominant_vertices(const EdgeSpace& s, const std::string& what, Op op) {
  Reports out;
  const VPolyhedron jd = join_dominant_v(s), cd = cut_dominant_v(s);
  for (const auto& j : enumerate_minimal_tjoins(s))
    out.push_back(named(op(jd, characteristic_vector(s, j)), what + ", T-join dominant at " + format_edges(s, j.edges)));
  for (const auto& k : enumerate_tcuts(s))
    out.push_back(named(op(cd, characteristic_vector(s, k)), what + ", T-cut dominant at " + format_edges(s, k.edges)));
  return out;
}

Reports suite_structure_lemma(const SuiteConfig& c) {
  return at_dominant_vertices(c.space(), "structure lemma",
                              [](const VPolyhedron& p, const Vector& v) { return verify_structure_lemma(p, v); });
}

Reports suite_dual_transfer(const SuiteConfig& c) {
  return at_dominant_vertices(c.space(), "dual transfer +1", [](const VPolyhedron& p, const Vector& v) {
    return verify_dual_transfer(p, v);
  });
}

Reports suite_blocker_involution(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  return {named(verify_blocker_involution(join_dominant_v(s)), "B(B(P)) = P for the T-join dominant"),
          named(verify_blocker_involution(cut_dominant_v(s)), "B(B(P)) = P for the T-cut dominant")};
}

Reports suite_blocking_duality(const SuiteConfig& c) {
  return {named(verify_blocking_duality(c.space()), "blocker of the T-join dominant is the T-cut dominant")};
}

Reports suite_projection_commutes(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  const std::size_t m = s.edge_count();
  Reports out;
  if (m < 2) return out;
  // Sum the first and last edge coordinates; then drop the last coordinate.
  std::vector<SparseVector> merge_rows{SparseVector::from_entries({{0, Rational(1)}, {m - 1, Rational(1)}})};
  for (std::size_t e = 1; e + 1 < m; ++e) merge_rows.push_back(SparseVector::unit(e));
  const LinearMap merge(m, merge_rows);
  const LinearMap drop = LinearMap::selection(m, 0, m - 1);
  const HPolyhedron dom = tjoin_dominant_h(s);
  for (const auto& j : enumerate_minimal_tjoins(s)) {
    const Vector v = characteristic_vector(s, j);
    out.push_back(named(verify_projection_commutes(dom, v, merge),
                        "projection commutes (merge " + s.edge_label(0) + "+" + s.edge_label(m - 1) + ") at " +
                            format_edges(s, j.edges)));
    out.push_back(named(verify_projection_commutes(dom, v, drop),
                        "projection commutes (drop " + s.edge_label(m - 1) + ") at " + format_edges(s, j.edges)));
  }
  return out;
}

Reports suite_face_radial_cone(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  std::vector<Row> degree;
  for (Node t : s.terminals()) degree.push_back(Row(SparseVector::from_dense(characteristic_vector(s, s.cut({t}))), 1));
  const HPolyhedron dom = tjoin_dominant_h(s);
  Reports out;
  for (const auto& j : enumerate_minimal_tjoins(s)) {
    const Vector v = characteristic_vector(s, j);
    if (!std::all_of(degree.begin(), degree.end(), [&](const Row& r) { return r.is_tight(v); })) continue;
    out.push_back(named(verify_face_radial_cone(dom, degree, v),
                        "radial cone of the degree face at " + format_edges(s, j.edges)));
  }
  if (out.empty()) {
    VerificationReport r;
    r.claim = "radial cone of the degree face";
    r.status = ReportStatus::skipped;
    r.detail = "no minimal T-join meets every terminal cut once";
    out.push_back(r);
  }
  return out;
}

Reports suite_fm_equals_gm(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  Reports out;
  for (const auto& j : selected_joins(c, s)) {
    std::vector<std::size_t> edges = j;
    if (c.edge) {
      const auto e = s.parse_edges(*c.edge);
      if (e.size() != 1) throw MalformedInput("--m must name one edge");
      edges = e;
    }
    for (std::size_t m : edges)
      out.push_back(named(verify_fm_equals_gm(s, j, m),
                          "F_m = G_m for J = " + format_edges(s, j) + ", m = " + s.edge_label(m)));
  }
  return out;
}

Reports suite_q_equals_qtilde(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  std::vector<std::vector<Node>> shores;
  if (c.u1) {
    shores.push_back(*c.u1);
  } else {
    for (const auto& k : enumerate_tcuts(s)) shores.push_back(k.shore);
  }
  Reports out;
  for (const auto& u : shores)
    out.push_back(named(verify_q_equals_qtilde(s, u), "Q = Q~ for U1 = " + format_nodes(u)));
  return out;
}

std::vector<ExtendedFormulation> all_pieces(const EdgeSpace& s) {
  std::vector<ExtendedFormulation> out;
  for (const auto& sel : piece_selectors(s)) out.push_back(tjoin_flow_piece(s, sel));
  return out;
}

Reports suite_union_covers(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  return {named(verify_union_covers(s, all_pieces(s)), "flow pieces cover the minimal T-joins")};
}

Reports suite_integrality(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  Reports out;
  for (const auto& sel : piece_selectors(s))
    out.push_back(named(verify_integrality(tjoin_flow_piece(s, sel)), "flow piece S = " + format_nodes(sel.S) +
                                                                           " has integral vertex images"));
  return out;
}

Reports suite_sizes(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  const std::size_t e = s.edge_count();
  Reports out;
  const auto pieces = all_pieces(s);
  std::size_t balas = 0;
  for (const auto& p : pieces) balas += p.size() + 1;
  out.push_back(verify_size(pieces.front(), 3 * e, "flow piece size is 3|E|"));
  const auto join = tjoin_dominant_extension(s);
  out.push_back(verify_size(join, balas, "Balas size is the sum of (piece size + 1)"));
  const auto martin = martin_dual_extension(join, Rational(1));
  out.push_back(verify_size(martin, join.size() + 1, "Martin transfer adds one row"));
  out.push_back(verify_size(tcut_dominant_extension(s), join.size() + 1 + e, "T-cut formulation size"));
  const auto first = enumerate_minimal_tjoins(s).front();
  out.push_back(verify_size(radial_cone_extension(join, characteristic_vector(s, first)), join.size() + 1,
                            "radial cone lift adds one row"));
  std::vector<ExtendedFormulation> gms;
  std::size_t polar = 0;
  for (std::size_t m : first.edges) {
    gms.push_back(g_m_extension(s, first.edges, m));
    polar += gms.back().size() + 1;
  }
  const auto ve = ve_radial_cone_extension(s, first.edges);
  out.push_back(verify_size(ve, polar + 1, "VE size at " + format_edges(s, first.edges) + " is sum(G_m + 1) + 1"));
  if (s.n() == 4 && s.terminals().size() == 4) out.push_back(verify_size(join, 114, "V4-join formulation size"));
  return out;
}

Reports suite_mutations(const SuiteConfig& c) {
  const EdgeSpace s = c.space();
  Reports out;
  const HPolyhedron dom = tjoin_dominant_h(s);
  const auto ext = tjoin_dominant_extension(s);
  for (std::size_t i = 0; i < dom.inequalities().size(); ++i) {
    if (dom.inequalities()[i].rhs.is_zero()) continue;
    HPolyhedron mutated(dom.dimension());
    for (std::size_t k = 0; k < dom.inequalities().size(); ++k)
      if (k != i) mutated.add_inequality(dom.inequalities()[k]);
    out.push_back(expect_refuted("mutation: deleted row " + describe(dom.inequalities()[i], ">=") + " detected",
                                 verify_extension_projects_to(ext, mutated, h_to_v(mutated))));
  }
  const auto sel = piece_selectors(s).front();
  for (std::size_t e = 0; e < s.edge_count(); ++e)
    out.push_back(expect_refuted("mutation: capacity row of " + s.edge_label(e) + " deleted from piece " +
                                     format_nodes(sel.S) + " detected",
                                 verify_extension_contained_in(tjoin_flow_piece_without_capacity(s, sel, e), dom)));
  const auto& t = s.terminals();
  if (t.size() >= 4) {
    const std::vector<Node> first_half(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2));
    const std::vector<Node> second_half(t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2), t.end());
    std::vector<ExtendedFormulation> kept{tjoin_flow_piece(s, {first_half}), tjoin_flow_piece(s, {second_half})};
    out.push_back(expect_refuted("mutation: only pieces " + format_nodes(first_half) + " and " +
                                     format_nodes(second_half) + " kept, detected",
                                 verify_union_covers(s, kept)));
  }
  return out;
}

const std::map<std::string, std::function<Reports(const SuiteConfig&)>>& registry() {
  static const std::map<std::string, std::function<Reports(const SuiteConfig&)>> r{
      {"tjoin-dominant", suite_tjoin_dominant},
      {"tcut-dominant", suite_tcut_dominant},
      {"ve-radial-cone", suite_ve_radial_cone},
      {"nonvertex-radial-cone", suite_nonvertex},
      {"radial-cone-identity", suite_radial_identity},
      {"structure-lemma", suite_structure_lemma},
      {"dual-transfer", suite_dual_transfer},
      {"blocker-involution", suite_blocker_involution},
      {"blocking-duality", suite_blocking_duality},
      {"projection-commutes", suite_projection_commutes},
      {"face-radial-cone", suite_face_radial_cone},
      {"fm-equals-gm", suite_fm_equals_gm},
      {"q-equals-qtilde", suite_q_equals_qtilde},
      {"union-covers", suite_union_covers},
      {"integrality", suite_integrality},
      {"sizes", suite_sizes},
      {"mutations", suite_mutations},
  };
  return r;
}

}  // namespace

EdgeSpace SuiteConfig::space() const {
  if (terminals.empty()) return EdgeSpace::all_terminals(n);
  return EdgeSpace(n, terminals);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "sizes",          "tjoin-dominant",   "tcut-dominant",       "union-covers",     "integrality",
      "radial-cone-identity", "structure-lemma", "dual-transfer",       "blocker-involution", "blocking-duality",
      "projection-commutes",  "face-radial-cone", "fm-equals-gm",  "ve-radial-cone",   "nonvertex-radial-cone",
      "q-equals-qtilde", "mutations",        "all-desk-scale"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "all-desk-scale") {
    Reports all;
    for (const auto& n : suite_names()) {
      if (n == "all-desk-scale") continue;
      for (auto& r : registry().at(n)(config)) all.push_back(std::move(r));
    }
    return all;
  }
  const auto it = registry().find(name);
  if (it == registry().end()) throw MalformedInput("unknown suite '" + name + "'");
  return it->second(config);
}

VerificationReport expect_refuted(const std::string& claim, const VerificationReport& inner) {
  VerificationReport r;
  r.claim = claim;
  r.seconds = inner.seconds;
  if (inner.status == ReportStatus::refuted && replay(inner)) {
    r.detail = inner.witnesses.empty() ? "refuted" : "witness: " + inner.witnesses.front();
  } else {
    r.status = ReportStatus::refuted;
    r.detail = "mutated check was " + to_string(inner.status) + (replay(inner) ? "" : " and did not replay");
    r.witnesses.push_back(r.detail);
  }
  return r;
}

}  // namespace xfkit
