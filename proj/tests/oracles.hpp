#pragma once

// LP-based reference checks used by several test files. They call only the
// simplex directly so that they stay independent of the verifier module.

#include "xfkit/extension.hpp"
#include "xfkit/graph.hpp"
#include "xfkit/lp.hpp"
#include "xfkit/polyhedron.hpp"

namespace oracle {

using namespace xfkit;

inline Vector pull_back(const ExtendedFormulation& ext, const Row& row) {
  const Vector a = row.coeffs.to_dense(ext.target_dimension());
  Vector c(ext.lifted_dimension());
  for (std::size_t i = 0; i < ext.projection.rows().size(); ++i)
    for (const auto& e : ext.projection.rows()[i].entries()) c[e.index] += a[i] * e.value;
  return c;
}

// min over pi(Q) of the row is >= rhs (or Q is empty).
inline bool row_valid(const ExtendedFormulation& ext, const Row& row) {
  const auto out = solve_lp(pull_back(ext, row), ext.lifted);
  if (out.status == LPStatus::infeasible) return true;
  return out.status == LPStatus::optimal && out.value >= row.rhs;
}

inline bool contained_in(const ExtendedFormulation& ext, const HPolyhedron& target) {
  for (const auto& r : target.inequalities())
    if (!row_valid(ext, r)) return false;
  for (const auto& r : target.equalities()) {
    Row neg(SparseVector().plus_scaled(Rational(-1), r.coeffs), -r.rhs);
    if (!row_valid(ext, r) || !row_valid(ext, neg)) return false;
  }
  return true;
}

inline bool has_preimage(const ExtendedFormulation& ext, const Vector& target, bool ray) {
  HPolyhedron s(ext.lifted_dimension());
  for (const auto& r : ext.lifted.inequalities()) s.add_inequality(Row(r.coeffs, ray ? Rational(0) : r.rhs));
  for (const auto& r : ext.lifted.equalities()) s.add_equality(Row(r.coeffs, ray ? Rational(0) : r.rhs));
  for (std::size_t i = 0; i < target.size(); ++i) s.add_equality(Row(ext.projection.rows()[i], target[i]));
  return solve_lp(Vector(s.dimension()), s).status != LPStatus::infeasible;
}

inline bool contains(const ExtendedFormulation& ext, const VPolyhedron& target) {
  for (const auto& x : target.vertices())
    if (!has_preimage(ext, x, false)) return false;
  for (const auto& r : target.rays())
    if (!has_preimage(ext, r, true)) return false;
  return true;
}

inline bool projects_onto(const ExtendedFormulation& ext, const HPolyhedron& h, const VPolyhedron& v) {
  return contained_in(ext, h) && contains(ext, v);
}

inline VPolyhedron subsets_dominant(const EdgeSpace& s, const std::vector<EdgeSubset>& subsets) {
  VPolyhedron v(s.edge_count());
  for (const auto& x : subsets) v.add_vertex(characteristic_vector(s, x));
  v.add_unit_rays();
  return v.canonical();
}

// Dominant rows written out directly from the enumerators.
inline HPolyhedron cut_rows(const EdgeSpace& s) {
  HPolyhedron h(s.edge_count());
  h.add_nonnegativity();
  for (const auto& c : enumerate_tcuts(s)) h.add_inequality(characteristic_vector(s, c), Rational(1));
  return h;
}

inline HPolyhedron join_rows(const EdgeSpace& s) {
  HPolyhedron h(s.edge_count());
  h.add_nonnegativity();
  for (const auto& j : enumerate_minimal_tjoins(s)) h.add_inequality(characteristic_vector(s, j), Rational(1));
  return h;
}

}  // namespace oracle
