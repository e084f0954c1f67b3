#include "xfkit/extension.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "xfkit/errors.hpp"
#include "xfkit/lp.hpp"
#include "xfkit/polyhedral_model.hpp"

namespace xfkit {

namespace {

SparseVector pull_back(const ExtendedFormulation& ext, const SparseVector& coeffs) {
  if (coeffs.extent() > ext.target_dimension()) throw MalformedInput("row exceeds the target dimension");
  return ext.projection.transpose_apply(coeffs.to_dense(ext.target_dimension()));
}

HPolyhedron recession_system(const HPolyhedron& h) {
  HPolyhedron r(h.dimension());
  for (const auto& row : h.inequalities()) r.add_inequality(Row(row.coeffs, Rational(0)));
  for (const auto& row : h.equalities()) r.add_equality(Row(row.coeffs, Rational(0)));
  return r;
}

// Lifted system with pi(u) = target appended.
HPolyhedron preimage_system(const HPolyhedron& lifted, const LinearMap& projection, const Vector& target) {
  HPolyhedron s = lifted;
  for (std::size_t i = 0; i < projection.rows().size(); ++i) s.add_equality(Row(projection.rows()[i], target[i]));
  return s;
}

bool feasible(const HPolyhedron& h) { return solve_lp(Vector(h.dimension()), h).status != LPStatus::infeasible; }

// Recession cone of pi(Q) as a product of per-coordinate cones, if it is one:
// 0 -> {0}, 1 -> R_+, -1 -> R_-, 2 -> R.
std::optional<std::vector<int>> coordinate_recession_cone(const ExtendedFormulation& ext) {
  const HPolyhedron rec = recession_system(ext.lifted);
  const std::size_t d = ext.target_dimension();
  std::vector<int> pattern(d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vector c = ext.projection.rows()[j].to_dense(ext.lifted_dimension());
    const bool can_decrease = solve_lp(c, rec, Sense::minimize).status == LPStatus::unbounded;
    const bool can_increase = solve_lp(c, rec, Sense::maximize).status == LPStatus::unbounded;
    pattern[j] = can_increase && can_decrease ? 2 : can_increase ? 1 : can_decrease ? -1 : 0;
    auto contains_direction = [&](int sign) {
      Vector e(d);
      e[j] = sign;
      return feasible(preimage_system(rec, ext.projection, e));
    };
    if (can_increase && !contains_direction(1)) return std::nullopt;
    if (can_decrease && !contains_direction(-1)) return std::nullopt;
  }
  return pattern;
}

std::vector<Node> endpoints_of(const EdgeSpace& space, std::size_t e) {
  const Edge p = space.edge(e);
  return {p.first, p.second};
}

void require_minimal_join(const EdgeSpace& space, const std::vector<std::size_t>& join) {
  if (!is_minimal_tjoin(space, join))
    throw DomainError(format_edges(space, join) + " is not a minimal T-join for T = " +
                      format_nodes(space.terminals()));
}

}  // namespace

void ExtendedFormulation::validate() const {
  if (projection.input_dimension() != lifted.dimension())
    throw MalformedInput("projection input dimension " + std::to_string(projection.input_dimension()) +
                         " != lifted dimension " + std::to_string(lifted.dimension()));
  if (!variables.empty() && variables.size() != lifted.dimension())
    throw MalformedInput("variable label count differs from lifted dimension");
  if (!target_labels.empty() && target_labels.size() != projection.output_dimension())
    throw MalformedInput("target label count differs from projection output dimension");
  for (const auto& b : blocks)
    if (b.start + b.count > lifted.dimension()) throw MalformedInput("block '" + b.label + "' out of range");
}

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

ExtendedFormulation trivial_extension(const HPolyhedron& p, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(p.dimension());
  ExtendedFormulation ext;
  ext.kind = "trivial";
  ext.lifted = p;
  ext.projection = LinearMap::identity(p.dimension());
  ext.variables = labels;
  ext.target_labels = std::move(labels);
  ext.blocks = {{"x", 0, p.dimension()}};
  ext.validate();
  return ext;
}

ExtendedFormulation radial_cone_extension(const ExtendedFormulation& ext, const Vector& v) {
  if (v.size() != ext.target_dimension()) throw MalformedInput("radial cone lift: point dimension mismatch");
  const LPOutcome pre = solve_lp(Vector(ext.lifted_dimension()), preimage_system(ext.lifted, ext.projection, v));
  if (pre.status == LPStatus::infeasible)
    throw MembershipError("radial cone lift: " + to_string(v) + " is not in the projection", "");
  const Vector& wv = pre.witness;
  const std::size_t dim = ext.lifted_dimension();
  const std::size_t mu = dim;

  ExtendedFormulation out;
  out.kind = "radial-cone-lift";
  out.lifted = HPolyhedron(dim + 1);
  for (const auto& r : ext.lifted.inequalities()) {
    const Rational awv = r.coeffs.dot(wv);
    out.lifted.add_inequality(Row(r.coeffs.plus_scaled(-(r.rhs - awv), SparseVector::unit(mu)), awv));
  }
  for (const auto& r : ext.lifted.equalities()) out.lifted.add_equality(r);
  out.lifted.add_inequality(Row(SparseVector::unit(mu), Rational(0)));
  out.projection = ext.projection.embedded(dim + 1, 0);
  out.variables = ext.variables;
  out.variables.push_back("mu");
  out.target_labels = ext.target_labels;
  out.blocks = ext.blocks;
  out.blocks.push_back({"mu", mu, 1});
  out.notes = ext.notes;
  out.validate();
  return out;
}

ExtendedFormulation face_extension(const ExtendedFormulation& ext, const std::vector<Row>& valid_rows) {
  ExtendedFormulation out = ext;
  out.kind = "face";
  for (const auto& r : valid_rows) {
    const SparseVector c = pull_back(ext, r.coeffs);
    const LPOutcome lp = solve_lp(c.to_dense(ext.lifted_dimension()), ext.lifted);
    if (lp.status == LPStatus::unbounded || (lp.status == LPStatus::optimal && lp.value < r.rhs))
      throw DomainError("face extension: " + describe(r, ">=") + " is not valid over the projection");
    out.lifted.add_equality(Row(c, r.rhs));
  }
  return out;
}

ExtendedFormulation map_extension(const ExtendedFormulation& ext, const LinearMap& map,
                                  std::vector<std::string> labels) {
  if (map.input_dimension() != ext.target_dimension())
    throw MalformedInput("map extension: map input dimension " + std::to_string(map.input_dimension()) +
                         " != projection output dimension " + std::to_string(ext.target_dimension()));
  ExtendedFormulation out = ext;
  out.kind = "mapped";
  out.projection = ext.projection.then(map);
  out.target_labels = labels.empty() ? default_labels(map.output_dimension()) : std::move(labels);
  out.validate();
  return out;
}

ExtendedFormulation balas_union(const std::vector<ExtendedFormulation>& pieces, const BalasOptions& options) {
  if (pieces.empty()) throw DomainError("balas union of an empty list");
  const std::size_t d = pieces.front().target_dimension();
  for (const auto& p : pieces)
    if (p.target_dimension() != d) throw MalformedInput("balas union: pieces have different target dimensions");
  if (options.check_nonempty)
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (!feasible(pieces[i].lifted)) throw DomainError("balas union: piece " + std::to_string(i + 1) + " is empty");

  std::vector<std::size_t> offset(pieces.size());
  std::size_t dim = d;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    offset[i] = dim;
    dim += pieces[i].lifted_dimension() + 1;
  }

  ExtendedFormulation out;
  out.kind = "balas";
  out.lifted = HPolyhedron(dim);
  out.target_labels = pieces.front().target_labels.empty() ? default_labels(d) : pieces.front().target_labels;
  out.variables = out.target_labels;
  out.blocks.push_back({"x", 0, d});
  std::vector<SparseEntry> lambda_sum;
  std::vector<std::vector<SparseEntry>> link(d);
  for (std::size_t j = 0; j < d; ++j) link[j].push_back({j, Rational(1)});

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    const std::size_t lambda = offset[i] + p.lifted_dimension();
    for (const auto& r : p.lifted.inequalities())
      out.lifted.add_inequality(Row(r.coeffs.shifted(offset[i]).plus_scaled(-r.rhs, SparseVector::unit(lambda)), 0));
    for (const auto& r : p.lifted.equalities())
      out.lifted.add_equality(Row(r.coeffs.shifted(offset[i]).plus_scaled(-r.rhs, SparseVector::unit(lambda)), 0));
    out.lifted.add_inequality(Row(SparseVector::unit(lambda), 0));
    lambda_sum.push_back({lambda, Rational(1)});
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& e : p.projection.rows()[j].entries()) link[j].push_back({offset[i] + e.index, -e.value});

    const std::string prefix = "p" + std::to_string(i + 1) + ":";
    const auto labels = p.variables.empty() ? default_labels(p.lifted_dimension(), "u") : p.variables;
    for (const auto& l : labels) out.variables.push_back(prefix + l);
    out.variables.push_back("lambda" + std::to_string(i + 1));
    out.blocks.push_back({"piece" + std::to_string(i + 1), offset[i], p.lifted_dimension() + 1});
  }
  out.lifted.add_equality(Row(SparseVector::from_entries(std::move(lambda_sum)), 1));
  for (auto& entries : link) out.lifted.add_equality(Row(SparseVector::from_entries(std::move(entries)), 0));

  std::vector<SparseVector> proj;
  for (std::size_t j = 0; j < d; ++j) proj.push_back(SparseVector::unit(j));
  out.projection = LinearMap(dim, std::move(proj));

  bool exact = false;
  if (options.certify_recession) {
    exact = true;
    std::optional<std::vector<int>> first;
    for (std::size_t i = 0; i < pieces.size() && exact; ++i) {
      const auto cone = coordinate_recession_cone(pieces[i]);
      if (!cone || (first && *first != *cone)) exact = false;
      if (!first) first = cone;
    }
  }
  out.notes.push_back(exact ? kExactUnionNote : kClosureUnionNote);
  out.validate();
  return out;
}

ExtendedFormulation martin_dual_extension(const ExtendedFormulation& ext, const Rational& gamma) {
  if (!feasible(ext.lifted)) throw DomainError("martin dual extension: the polyhedron Q is empty");
  const std::size_t d = ext.target_dimension();
  const std::size_t big = ext.lifted_dimension();
  const auto& ineq = ext.lifted.inequalities();
  const auto& eq = ext.lifted.equalities();
  const std::size_t lam = d, eta = d + ineq.size();
  const std::size_t dim = eta + eq.size();

  // Column j of the lifted system reads sum_i A_ij lambda_i + sum_k E_kj eta_k = (pi^T x)_j.
  std::vector<std::vector<SparseEntry>> columns(big);
  for (std::size_t i = 0; i < ineq.size(); ++i)
    for (const auto& e : ineq[i].coeffs.entries()) columns[e.index].push_back({lam + i, e.value});
  for (std::size_t k = 0; k < eq.size(); ++k)
    for (const auto& e : eq[k].coeffs.entries()) columns[e.index].push_back({eta + k, e.value});
  for (std::size_t t = 0; t < d; ++t)
    for (const auto& e : ext.projection.rows()[t].entries()) columns[e.index].push_back({t, -e.value});

  ExtendedFormulation out;
  out.kind = "martin";
  out.lifted = HPolyhedron(dim);
  for (auto& c : columns) {
    SparseVector row = SparseVector::from_entries(std::move(c));
    if (!row.empty()) out.lifted.add_equality(Row(std::move(row), 0));
  }
  std::vector<SparseEntry> objective;
  for (std::size_t i = 0; i < ineq.size(); ++i) objective.push_back({lam + i, ineq[i].rhs});
  for (std::size_t k = 0; k < eq.size(); ++k) objective.push_back({eta + k, eq[k].rhs});
  out.lifted.add_inequality(Row(SparseVector::from_entries(std::move(objective)), gamma));
  for (std::size_t i = 0; i < ineq.size(); ++i) out.lifted.add_inequality(Row(SparseVector::unit(lam + i), 0));

  out.projection = LinearMap::selection(dim, 0, d);
  out.target_labels = ext.target_labels.empty() ? default_labels(d) : ext.target_labels;
  out.variables = out.target_labels;
  for (std::size_t i = 0; i < ineq.size(); ++i) out.variables.push_back("lambda" + std::to_string(i + 1));
  for (std::size_t k = 0; k < eq.size(); ++k) out.variables.push_back("eta" + std::to_string(k + 1));
  out.blocks = {{"x", 0, d}, {"lambda", lam, ineq.size()}, {"eta", eta, eq.size()}};
  out.validate();
  return out;
}

void validate_selector(const EdgeSpace& space, const PieceSelector& sel) {
  const auto& t = space.terminals();
  if (t.size() % 2 != 0) throw DomainError("|T| is odd");
  if (sel.S.size() * 2 != t.size())
    throw DomainError("selector " + format_nodes(sel.S) + " must have |T|/2 = " + std::to_string(t.size() / 2) +
                      " nodes");
  for (Node s : sel.S)
    if (!space.is_terminal(s)) throw DomainError("selector node " + std::to_string(s) + " is not a terminal");
  std::vector<Node> sorted = sel.S;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("selector has repeated nodes");
}

std::vector<PieceSelector> piece_selectors(const EdgeSpace& space) {
  const auto& t = space.terminals();
  if (t.size() % 2 != 0) throw DomainError("|T| = " + std::to_string(t.size()) + " is odd");
  std::vector<PieceSelector> out;
  const std::size_t half = t.size() / 2;
  std::vector<Node> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (current.size() == half) {
      out.push_back({current});
      return;
    }
    for (std::size_t i = start; i + (half - current.size()) <= t.size(); ++i) {
      current.push_back(t[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

ExtendedFormulation flow_piece(const EdgeSpace& space, const PieceSelector& sel,
                               std::optional<std::size_t> dropped_capacity) {
  validate_selector(space, sel);
  const std::size_t m = space.edge_count();
  const std::size_t dim = 3 * m;
  auto arc = [m](std::size_t e, bool reverse) { return m + 2 * e + (reverse ? 1 : 0); };

  ExtendedFormulation out;
  out.kind = "tjoin-flow-piece";
  out.lifted = HPolyhedron(dim);
  std::vector<bool> in_s(static_cast<std::size_t>(space.n()) + 1, false);
  for (Node s : sel.S) in_s[s] = true;
  for (Node w = 1; w <= space.n(); ++w) {
    std::vector<SparseEntry> row;
    for (std::size_t e = 0; e < m; ++e) {
      const Edge p = space.edge(e);
      if (p.first == w) {
        row.push_back({arc(e, false), Rational(1)});
        row.push_back({arc(e, true), Rational(-1)});
      } else if (p.second == w) {
        row.push_back({arc(e, true), Rational(1)});
        row.push_back({arc(e, false), Rational(-1)});
      }
    }
    const Rational rhs = in_s[w] ? Rational(1) : space.is_terminal(w) ? Rational(-1) : Rational(0);
    if (row.empty()) {
      if (!rhs.is_zero()) throw DomainError("flow piece: isolated terminal");
      continue;
    }
    out.lifted.add_equality(Row(SparseVector::from_entries(std::move(row)), rhs));
  }
  for (std::size_t e = 0; e < m; ++e) {
    out.lifted.add_inequality(Row(SparseVector::unit(arc(e, false)), 0));
    out.lifted.add_inequality(Row(SparseVector::unit(arc(e, true)), 0));
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (dropped_capacity && *dropped_capacity == e) continue;
    out.lifted.add_inequality(
        Row(SparseVector::from_entries({{e, Rational(1)}, {arc(e, false), Rational(-1)}, {arc(e, true), Rational(-1)}}),
            0));
  }
  out.projection = LinearMap::selection(dim, 0, m);
  out.target_labels = space.edge_labels();
  out.variables = out.target_labels;
  for (std::size_t e = 0; e < m; ++e) {
    const Edge p = space.edge(e);
    out.variables.push_back("f" + std::to_string(p.first) + ">" + std::to_string(p.second));
    out.variables.push_back("f" + std::to_string(p.second) + ">" + std::to_string(p.first));
  }
  out.blocks = {{"x", 0, m}, {"f", m, 2 * m}};
  out.notes.push_back("S = " + format_nodes(sel.S));
  out.validate();
  return out;
}

}  // namespace

ExtendedFormulation tjoin_flow_piece(const EdgeSpace& space, const PieceSelector& sel) {
  return flow_piece(space, sel, std::nullopt);
}

ExtendedFormulation tjoin_flow_piece_without_capacity(const EdgeSpace& space, const PieceSelector& sel,
                                                      std::size_t dropped_edge) {
  if (dropped_edge >= space.edge_count()) throw MalformedInput("dropped edge index out of range");
  ExtendedFormulation out = flow_piece(space, sel, dropped_edge);
  out.notes.push_back("capacity row of edge " + space.edge_label(dropped_edge) + " removed");
  return out;
}

ExtendedFormulation tjoin_dominant_extension(const EdgeSpace& space, const BalasOptions& options) {
  if (space.terminals().size() % 2 != 0)
    throw DomainError("|T| = " + std::to_string(space.terminals().size()) + " is odd");
  if (space.terminals().empty()) throw DomainError("the flow construction needs |T| >= 2");
  std::vector<ExtendedFormulation> pieces;
  for (const auto& sel : piece_selectors(space)) pieces.push_back(tjoin_flow_piece(space, sel));
  ExtendedFormulation out = balas_union(pieces, options);
  out.kind = "tjoin-dominant";
  out.target_labels = space.edge_labels();
  std::copy(out.target_labels.begin(), out.target_labels.end(), out.variables.begin());
  return out;
}

ExtendedFormulation tcut_dominant_extension(const EdgeSpace& space) {
  ExtendedFormulation out = martin_dual_extension(tjoin_dominant_extension(space), Rational(1));
  out.kind = "tcut-dominant";
  for (std::size_t j = 0; j < space.edge_count(); ++j) out.lifted.add_inequality(Row(SparseVector::unit(j), 0));
  return out;
}

ExtendedFormulation g_m_extension(const EdgeSpace& space, const std::vector<std::size_t>& join, std::size_t m) {
  if (std::find(join.begin(), join.end(), m) == join.end())
    throw DomainError("edge " + (m < space.edge_count() ? space.edge_label(m) : std::to_string(m)) +
                      " is not in the join " + format_edges(space, join));
  const EdgeSpace local(space.n(), endpoints_of(space, m));
  std::vector<Row> rows{Row(SparseVector::unit(m), 1)};
  for (std::size_t e : join)
    if (e != m) rows.emplace_back(SparseVector::unit(e), 0);
  ExtendedFormulation out = face_extension(tcut_dominant_extension(local), rows);
  out.kind = "g_m";
  out.notes.push_back("m = " + space.edge_label(m));
  return out;
}

ExtendedFormulation ve_polar_face_extension(const EdgeSpace& space, const std::vector<std::size_t>& join) {
  require_minimal_join(space, join);
  std::vector<ExtendedFormulation> pieces;
  for (std::size_t m : join) pieces.push_back(g_m_extension(space, join, m));
  ExtendedFormulation out = balas_union(pieces);
  out.kind = "polar-face";
  return out;
}

ExtendedFormulation ve_radial_cone_extension(const EdgeSpace& space, const std::vector<std::size_t>& join) {
  const ExtendedFormulation polar = ve_polar_face_extension(space, join);
  ExtendedFormulation out = martin_dual_extension(polar, Rational(1));
  out.kind = "ve-radial-cone";
  out.notes.push_back("J = " + format_edges(space, join));
  return out;
}

Vector lexicographic_min_point(const HPolyhedron& p) {
  HPolyhedron current = p;
  Vector point;
  for (std::size_t j = 0; j < p.dimension(); ++j) {
    const LPOutcome lp = solve_lp(unit_vector(p.dimension(), j), current);
    if (lp.status == LPStatus::infeasible) throw DomainError("lexicographic minimum of an empty polyhedron");
    if (lp.status == LPStatus::unbounded)
      throw DomainError("coordinate " + std::to_string(j) + " is unbounded below; no lexicographic minimum");
    current.add_equality(Row(SparseVector::unit(j), lp.value));
    point = lp.witness;
  }
  if (p.dimension() == 0 && solve_lp(Vector{}, p).status == LPStatus::infeasible)
    throw DomainError("lexicographic minimum of an empty polyhedron");
  return point;
}

ExtendedFormulation nonvertex_radial_cone_extension(const EdgeSpace& space, const Vector& v) {
  const HPolyhedron p = tjoin_dominant_h(space);
  require_member(p, v, "nonvertex radial cone");
  std::vector<Row> tight;
  bool cut_row_tight = false;
  for (const auto& r : p.inequalities()) {
    if (!r.is_tight(v)) continue;
    tight.push_back(r);
    if (!r.rhs.is_zero()) cut_row_tight = true;
  }
  if (!cut_row_tight) {
    // No cut row is tight, so the polar face is empty and the cone is cut out
    // by the tight nonnegativity rows alone.
    ExtendedFormulation out = trivial_extension(radial_cone_h(p, v), space.edge_labels());
    out.kind = "nonvertex-radial-cone";
    out.notes.push_back("no T-cut row tight at v; radial cone given by its tight nonnegativity rows");
    return out;
  }
  const Vector w = lexicographic_min_point(face_restrict(p, tight));
  std::vector<std::size_t> join;
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (w[e] == 1) join.push_back(e);
    else if (!w[e].is_zero()) throw std::logic_error("lexicographic vertex is not 0/1: " + to_string(w));
  }
  const ExtendedFormulation polar_w = ve_polar_face_extension(space, join);
  const ExtendedFormulation polar_v = face_extension(polar_w, Row(SparseVector::from_dense(v), 1));
  ExtendedFormulation out = martin_dual_extension(polar_v, Rational(1));
  out.kind = "nonvertex-radial-cone";
  out.notes.push_back("w = chi(" + format_edges(space, join) + ")");
  return out;
}

namespace {

std::vector<SparseEntry> cut_row_entries(const EdgeSpace& space, const std::vector<Node>& shore,
                                         const std::vector<Node>& within) {
  // edges with one end in `shore` and the other in within \ shore
  std::vector<SparseEntry> out;
  for (Node a : shore)
    for (Node b : within)
      if (std::find(shore.begin(), shore.end(), b) == shore.end()) out.push_back({space.index(a, b), Rational(1)});
  return out;
}

// x(S1 : V_i \ S1) >= 1 for all S1 in V_i with |T_i & S1| odd, enumerated directly.
void add_local_cut_rows(const EdgeSpace& space, const std::vector<Node>& nodes, const std::vector<Node>& terminals,
                        HPolyhedron& h) {
  const std::size_t k = nodes.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Node> s;
    std::size_t odd = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) {
        s.push_back(nodes[i]);
        if (std::find(terminals.begin(), terminals.end(), nodes[i]) != terminals.end()) ++odd;
      }
    if (odd % 2 == 0) continue;
    h.add_inequality(Row(SparseVector::from_entries(cut_row_entries(space, s, nodes)), 1));
  }
}

ProductBlock join_block(const EdgeSpace& space, const std::string& label, const std::vector<Node>& nodes,
                        const std::vector<Node>& terminals) {
  ProductBlock b;
  b.label = label;
  const int k = static_cast<int>(nodes.size());
  if (k < 2) {
    b.local = HPolyhedron(0);
    return b;
  }
  std::vector<Node> local_t;
  for (Node t : terminals)
    local_t.push_back(static_cast<Node>(std::find(nodes.begin(), nodes.end(), t) - nodes.begin()) + 1);
  const EdgeSpace local(k, local_t);
  for (std::size_t e = 0; e < local.edge_count(); ++e) {
    const Edge p = local.edge(e);
    b.edges.push_back(space.index(nodes[p.first - 1], nodes[p.second - 1]));
  }
  b.local = tjoin_dominant_h(local);
  return b;
}

}  // namespace

MainTheoremFace main_theorem_face(const EdgeSpace& space, const std::vector<Node>& u1_in) {
  MainTheoremFace f;
  f.u1 = u1_in;
  std::sort(f.u1.begin(), f.u1.end());
  if (std::adjacent_find(f.u1.begin(), f.u1.end()) != f.u1.end()) throw MalformedInput("U1 has repeated nodes");
  for (Node u : f.u1)
    if (u < 1 || u > space.n()) throw MalformedInput("U1 node " + std::to_string(u) + " outside 1..n");
  for (Node v = 1; v <= space.n(); ++v)
    if (!std::binary_search(f.u1.begin(), f.u1.end(), v)) f.u2.push_back(v);
  auto terminals_in = [&](const std::vector<Node>& u) {
    std::vector<Node> t;
    for (Node v : u)
      if (space.is_terminal(v)) t.push_back(v);
    return t;
  };
  const auto tu1 = terminals_in(f.u1), tu2 = terminals_in(f.u2);
  if (tu1.size() % 2 == 0 || tu2.size() % 2 == 0)
    throw DomainError("U1 = " + format_nodes(f.u1) + " must meet T in an odd number of nodes on both sides");
  f.t1 = tu1.front();
  f.t2 = tu2.front();
  for (Node v : f.u1)
    if (v != f.t1) f.v1.push_back(v);
  for (Node v : f.u2)
    if (v != f.t2) f.v2.push_back(v);
  for (Node v : tu1)
    if (v != f.t1) f.t1_set.push_back(v);
  for (Node v : tu2)
    if (v != f.t2) f.t2_set.push_back(v);

  const std::size_t m = space.edge_count();
  const std::vector<Node> tt{f.t1, f.t2};
  auto between = [&](const std::vector<Node>& a, const std::vector<Node>& b) {
    for (Node x : a)
      for (Node y : b) f.forbidden.push_back(space.index(x, y));
  };
  between(f.v1, f.v2);
  between(f.v1, tt);
  between(f.v2, tt);
  std::sort(f.forbidden.begin(), f.forbidden.end());
  const std::size_t t1t2 = space.index(f.t1, f.t2);

  f.v = characteristic_vector(space, space.cut(f.u1));
  f.p_face = tjoin_dominant_h(space);
  f.p_face.add_equality(f.v, Rational(1));

  auto fixed_rows = [&](HPolyhedron& h) {
    h.add_nonnegativity();
    h.add_equality(Row(SparseVector::unit(t1t2), 1));
    for (std::size_t e : f.forbidden) h.add_equality(Row(SparseVector::unit(e), 0));
  };
  f.q = HPolyhedron(m);
  fixed_rows(f.q);
  for (const auto& c : enumerate_tcuts(space)) f.q.add_inequality(characteristic_vector(space, c), Rational(1));

  f.q_tilde = HPolyhedron(m);
  fixed_rows(f.q_tilde);
  add_local_cut_rows(space, f.v1, f.t1_set, f.q_tilde);
  add_local_cut_rows(space, f.v2, f.t2_set, f.q_tilde);

  f.blocks.push_back(join_block(space, "E(V1)", f.v1, f.t1_set));
  f.blocks.push_back(join_block(space, "E(V2)", f.v2, f.t2_set));
  ProductBlock point;
  point.label = "F+t1t2";
  point.edges = f.forbidden;
  point.edges.push_back(t1t2);
  std::sort(point.edges.begin(), point.edges.end());
  point.local = HPolyhedron(point.edges.size());
  point.local.add_nonnegativity();
  for (std::size_t i = 0; i < point.edges.size(); ++i)
    point.local.add_equality(Row(SparseVector::unit(i), point.edges[i] == t1t2 ? 1 : 0));
  f.blocks.push_back(std::move(point));
  return f;
}

HPolyhedron product_of_blocks(std::size_t dimension, const std::vector<ProductBlock>& blocks) {
  HPolyhedron out(dimension);
  auto embed = [](const ProductBlock& b, const SparseVector& local) {
    std::vector<SparseEntry> entries;
    for (const auto& e : local.entries()) entries.push_back({b.edges.at(e.index), e.value});
    return SparseVector::from_entries(std::move(entries));
  };
  for (const auto& b : blocks) {
    if (b.local.dimension() != b.edges.size()) throw MalformedInput("block '" + b.label + "' dimension mismatch");
    for (const auto& r : b.local.inequalities()) out.add_inequality(Row(embed(b, r.coeffs), r.rhs));
    for (const auto& r : b.local.equalities()) out.add_equality(Row(embed(b, r.coeffs), r.rhs));
  }
  return out;
}

}  // namespace xfkit
