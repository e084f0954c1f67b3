#include "doctest.h"
#include "xfkit/double_description.hpp"
#include "xfkit/errors.hpp"
#include "xfkit/graph.hpp"
#include "xfkit/lp.hpp"
#include "xfkit/polyhedral_model.hpp"

#include <algorithm>

using namespace xfkit;

namespace {

HPolyhedron pair_2d() {
  HPolyhedron h(2);
  h.add_nonnegativity();
  h.add_inequality(Vector{1, 1}, Rational(1));
  return h;
}

VPolyhedron pair_2d_v() {
  VPolyhedron v(2);
  v.add_vertex({1, 0});
  v.add_vertex({0, 1});
  v.add_unit_rays();
  return v;
}

VPolyhedron subsets_dominant(const EdgeSpace& s, const std::vector<EdgeSubset>& subsets) {
  VPolyhedron v(s.edge_count());
  for (const auto& x : subsets) v.add_vertex(characteristic_vector(s, x));
  v.add_unit_rays();
  return v.canonical();
}

std::size_t meet(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t k = 0;
  for (auto e : a) k += std::count(b.begin(), b.end(), e);
  return k;
}

}  // namespace

TEST_CASE("PointInP checks membership") {
  const HPolyhedron p = pair_2d();
  CHECK_NOTHROW(PointInP(p, {1, 0}));
  CHECK_THROWS_AS(PointInP(p, {Rational(1, 2), Rational(1, 3)}), MembershipError);
  try {
    PointInP(p, {-1, 5});
  } catch (const MembershipError& e) {
    CHECK(!e.violated_row().empty());
  }
}

TEST_CASE("radial_cone_h keeps the active rows") {
  const HPolyhedron k = radial_cone_h(pair_2d(), {1, 0});
  CHECK(k.inequalities().size() == 2);
  CHECK(k.find_inequality(Row(SparseVector::unit(1), 0)));
  CHECK(k.find_inequality(Row::dense(Vector{1, 1}, 1)));
  CHECK(radial_cone_h(pair_2d(), {3, 3}).row_count() == 0);
  CHECK_THROWS_AS(radial_cone_h(pair_2d(), {0, 0}), MembershipError);

  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const auto j = s.parse_edges("12,34");
  const HPolyhedron kj = radial_cone_h(tjoin_dominant_h(s), characteristic_vector(s, j));
  CHECK(kj.inequalities().size() == 8);
  for (Node v = 1; v <= 4; ++v)
    CHECK(kj.find_inequality(Row(SparseVector::from_dense(characteristic_vector(s, s.cut({v}))), 1)));
  for (std::size_t e = 0; e < 6; ++e)
    CHECK(kj.find_inequality(Row(SparseVector::unit(e), 0)).has_value() == (std::find(j.begin(), j.end(), e) == j.end()));
}

TEST_CASE("radial_cone_h keeps equalities") {
  HPolyhedron p = pair_2d();
  p.add_equality(Vector{1, -1}, Rational(0));
  const HPolyhedron k = radial_cone_h(p, {2, 2});
  CHECK(k.inequalities().empty());
  CHECK(k.equalities().size() == 1);
}

TEST_CASE("dominant adds unit rays and prunes") {
  VPolyhedron v(2);
  v.add_vertex({1, 0});
  v.add_vertex({0, 1});
  v.add_vertex({2, 1});
  const VPolyhedron d = dominant(v);
  CHECK(d.vertices() == std::vector<Vector>{{0, 1}, {1, 0}});
  CHECK(d.rays() == std::vector<Vector>{{0, 1}, {1, 0}});

  VPolyhedron w(2);
  w.add_vertex({1, 1});
  w.add_vertex({2, 0});
  CHECK(dominant(w).vertices().size() == 2);

  VPolyhedron bad(1);
  bad.add_vertex({-1});
  CHECK_THROWS_AS(dominant(bad), DomainError);
}

TEST_CASE("dominant of matchings and stars is the V4-join dominant") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  VPolyhedron v(6);
  for (const auto& m : enumerate_perfect_matchings(s)) v.add_vertex(characteristic_vector(s, m));
  for (Node c = 1; c <= 4; ++c) v.add_vertex(characteristic_vector(s, s.cut({c})));
  v.add_vertex(Vector(6, Rational(1)));  // dominated by every matching
  const VPolyhedron d = dominant(v);
  CHECK(d.vertices().size() == 7);
  CHECK(d.rays().size() == 6);
  CHECK(d == h_to_v(tjoin_dominant_h(s)));
}

TEST_CASE("blocking predicates") {
  CHECK(is_blocking(pair_2d_v()));
  VPolyhedron no_rays(2);
  no_rays.add_vertex({1, 0});
  std::string reason;
  CHECK_FALSE(is_blocking(no_rays, &reason));
  CHECK(!reason.empty());
  CHECK_THROWS_AS(require_blocking(no_rays), DomainError);
  CHECK_FALSE(is_blocking(VPolyhedron(2)));
}

TEST_CASE("blocker of the 2D pair") {
  const HPolyhedron b = blocker(pair_2d_v());
  CHECK(b.inequalities().size() == 4);
  CHECK(b.find_inequality(Row(SparseVector::unit(0), 1)));
  CHECK(b.find_inequality(Row(SparseVector::unit(1), 1)));
  const HPolyhedron bb = blocker(h_to_v(b));
  CHECK(h_to_v(bb) == pair_2d_v().canonical());
}

TEST_CASE("blocker of the V4-join dominant has the odd cuts as vertices") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const VPolyhedron joins = subsets_dominant(s, enumerate_minimal_tjoins(s));
  const VPolyhedron b = h_to_v(blocker(joins));
  CHECK(b == subsets_dominant(s, enumerate_tcuts(s)));
  CHECK(b.vertices().size() == 4);
}

TEST_CASE("polar faces") {
  const HPolyhedron f = polar_face(blocker(pair_2d_v()), {1, 0});
  CHECK(f.equalities().size() == 1);
  CHECK(h_to_v(f).vertices() == std::vector<Vector>{{1, 1}});
  CHECK_THROWS_AS(polar_face(blocker(pair_2d_v()), {Rational(1, 2), Rational(1, 3)}), DomainError);

  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const auto j = s.parse_edges("12,34");
  const VPolyhedron joins = subsets_dominant(s, enumerate_minimal_tjoins(s));
  const VPolyhedron face = h_to_v(polar_face(blocker(joins), characteristic_vector(s, j)));
  VPolyhedron stars(6);
  for (Node v = 1; v <= 4; ++v) stars.add_vertex(characteristic_vector(s, s.cut({v})));
  CHECK(face.vertices() == stars.canonical().vertices());

  // Blocker of the odd-cut dominant, face at the cut of node 1.
  const VPolyhedron cuts = subsets_dominant(s, enumerate_tcuts(s));
  const auto d1 = s.cut({1});
  const VPolyhedron face2 = h_to_v(polar_face(blocker(cuts), characteristic_vector(s, d1)));
  VPolyhedron expected(6);
  for (const auto& jj : enumerate_minimal_tjoins(s))
    if (meet(jj.edges, d1) == 1) expected.add_vertex(characteristic_vector(s, jj));
  CHECK(face2.vertices() == expected.canonical().vertices());
  CHECK(face2.vertices().size() == 6);
}

TEST_CASE("dominant H-descriptions") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const HPolyhedron j = tjoin_dominant_h(s), c = tcut_dominant_h(s);
  CHECK(j.inequalities().size() == 10);
  CHECK(c.inequalities().size() == 13);
  const EdgeSpace s2 = EdgeSpace::all_terminals(2);
  CHECK(tjoin_dominant_h(s2).sorted().inequalities() == tcut_dominant_h(s2).sorted().inequalities());
  CHECK(tjoin_dominant_h(s2).inequalities().size() == 2);
  CHECK_THROWS_AS(tjoin_dominant_h(EdgeSpace(4, {1, 2, 3})), DomainError);
}

TEST_CASE("face_restrict") {
  const HPolyhedron f = face_restrict(pair_2d(), {Row(SparseVector::unit(1), 0)});
  const VPolyhedron v = h_to_v(f);
  CHECK(v.vertices() == std::vector<Vector>{{1, 0}});
  CHECK(v.rays() == std::vector<Vector>{{1, 0}});
  CHECK(face_restrict(pair_2d(), {}).sorted().inequalities() == pair_2d().sorted().inequalities());
  CHECK_THROWS_AS(face_restrict(pair_2d(), {Row(SparseVector::unit(0), 5)}), MalformedInput);

  // Degree rows of the V4-join dominant cut out the perfect matching polytope.
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  std::vector<Row> degree;
  for (Node v = 1; v <= 4; ++v) degree.push_back(Row(SparseVector::from_dense(characteristic_vector(s, s.cut({v}))), 1));
  const VPolyhedron pm = h_to_v(face_restrict(tjoin_dominant_h(s), degree));
  CHECK(pm.rays().empty());
  CHECK(pm.vertices() == subsets_dominant(s, enumerate_perfect_matchings(s)).vertices());
}

TEST_CASE("face_restrict output lies in its input") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const HPolyhedron p = tjoin_dominant_h(s);
  for (std::size_t i = 0; i < p.inequalities().size(); ++i) {
    const HPolyhedron f = face_restrict(p, {p.inequalities()[i]});
    for (const auto& r : p.inequalities()) {
      const auto out = solve_lp(r.coeffs.to_dense(6), f);
      CHECK(out.status == LPStatus::optimal);
      CHECK(out.value >= r.rhs);
    }
  }
}
