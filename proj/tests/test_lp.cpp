#include "doctest.h"
#include "xfkit/errors.hpp"
#include "xfkit/lp.hpp"

#include <functional>
#include <optional>
#include <random>

using namespace xfkit;

namespace {

// Brute-force LP oracle over a bounded polyhedron: the optimum of a bounded
// LP is attained at a basic solution, so enumerate all d-subsets of rows,
// solve the square system exactly and keep the best feasible point.
std::optional<Rational> vertex_oracle(const Vector& c, const HPolyhedron& h) {
  const std::size_t d = h.dimension();
  std::vector<Row> rows(h.inequalities().begin(), h.inequalities().end());
  std::optional<Rational> best;
  std::vector<std::size_t> pick(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      std::vector<Vector> m(d, Vector(d + 1));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = rows[pick[i]].coeffs.at(j);
        m[i][d] = rows[pick[i]].rhs;
      }
      for (std::size_t col = 0; col < d; ++col) {
        std::size_t p = col;
        while (p < d && m[p][col].is_zero()) ++p;
        if (p == d) return;
        std::swap(m[p], m[col]);
        for (std::size_t i = 0; i < d; ++i) {
          if (i == col || m[i][col].is_zero()) continue;
          const Rational f = m[i][col] / m[col][col];
          for (std::size_t j = col; j <= d; ++j) m[i][j] -= f * m[col][j];
        }
      }
      Vector x(d);
      for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d] / m[i][i];
      if (!h.contains(x)) return;
      const Rational v = dot(c, x);
      if (!best || v < *best) best = v;
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

HPolyhedron random_box_polytope(std::mt19937& rng, std::size_t d, std::size_t extra) {
  std::uniform_int_distribution<int> coef(-3, 3), rhs(-6, 2);
  HPolyhedron h(d);
  for (std::size_t j = 0; j < d; ++j) {
    h.add_inequality(Row(SparseVector::unit(j), Rational(-4)));
    h.add_inequality(Row(SparseVector::unit(j, Rational(-1)), Rational(-4)));
  }
  for (std::size_t k = 0; k < extra; ++k) {
    Vector a(d);
    for (auto& v : a) v = coef(rng);
    h.add_inequality(a, Rational(rhs(rng)));
  }
  return h;
}

}  // namespace

TEST_CASE("lp: unit blocking simplex") {
  HPolyhedron h(2);
  h.add_nonnegativity();
  h.add_inequality(Vector{1, 1}, Rational(1));
  const LPOutcome out = solve_lp(Vector{1, 1}, h);
  REQUIRE(out.status == LPStatus::optimal);
  CHECK(out.value == 1);
  CHECK(h.contains(out.witness));
  CHECK(check_certificate(Vector{1, 1}, h, Sense::minimize, out).empty());
}

TEST_CASE("lp: contradictory bounds are infeasible with a Farkas certificate") {
  HPolyhedron h(1);
  h.add_inequality(Vector{1}, Rational(1));
  h.add_inequality(Vector{-1}, Rational(0));
  const LPOutcome out = solve_lp(Vector{1}, h);
  REQUIRE(out.status == LPStatus::infeasible);
  CHECK(is_farkas_certificate(h, out.inequality_multipliers, out.equality_multipliers));
}

TEST_CASE("lp: open half-line is unbounded") {
  HPolyhedron h(1);
  h.add_nonnegativity();
  const LPOutcome out = solve_lp(Vector{-1}, h);
  REQUIRE(out.status == LPStatus::unbounded);
  CHECK(out.ray == Vector{1});
}

TEST_CASE("lp: free directions and equalities") {
  HPolyhedron h(3);
  h.add_equality(Vector{1, 1, 0}, Rational(2));
  h.add_inequality(Vector{0, 0, 1}, Rational(-1));
  // x3 free upward only, x1 - x2 unconstrained along the equality
  auto out = solve_lp(Vector{0, 0, 1}, h);
  REQUIRE(out.status == LPStatus::optimal);
  CHECK(out.value == -1);
  out = solve_lp(Vector{1, 0, 0}, h);
  REQUIRE(out.status == LPStatus::unbounded);
  out = solve_lp(Vector{1, 1, 0}, h, Sense::maximize);
  REQUIRE(out.status == LPStatus::optimal);
  CHECK(out.value == 2);

  HPolyhedron bad(2);
  bad.add_equality(Vector{1, 1}, Rational(1));
  bad.add_equality(Vector{2, 2}, Rational(3));
  CHECK(solve_lp(Vector{0, 0}, bad).status == LPStatus::infeasible);
  CHECK_THROWS_AS(solve_lp(Vector{1}, bad), MalformedInput);
}

TEST_CASE("lp: zero-dimensional problems") {
  HPolyhedron ok(0);
  ok.add_inequality(Row(SparseVector(), Rational(-1)));
  CHECK(solve_lp(Vector{}, ok).status == LPStatus::optimal);
  HPolyhedron bad(0);
  bad.add_inequality(Row(SparseVector(), Rational(1)));
  CHECK(solve_lp(Vector{}, bad).status == LPStatus::infeasible);
}

TEST_CASE("lp: random bounded problems agree with the vertex oracle and both pricing rules") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(-5, 5);
  LPOptions bland;
  bland.pricing = PricingRule::bland;
  int feasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const HPolyhedron h = random_box_polytope(rng, d, 2 + trial % 4);
    Vector c(d);
    for (auto& v : c) v = coef(rng);
    const auto oracle = vertex_oracle(c, h);
    const LPOutcome a = solve_lp(c, h);
    const LPOutcome b = solve_lp(c, h, Sense::minimize, bland);
    if (!oracle) {
      CHECK(a.status == LPStatus::infeasible);
      CHECK(b.status == LPStatus::infeasible);
      continue;
    }
    ++feasible;
    REQUIRE(a.status == LPStatus::optimal);
    REQUIRE(b.status == LPStatus::optimal);
    CHECK(a.value == *oracle);
    CHECK(b.value == *oracle);
  }
  CHECK(feasible > 30);
}

TEST_CASE("lp: determinism") {
  std::mt19937 rng(5);
  const HPolyhedron h = random_box_polytope(rng, 4, 5);
  const Vector c{1, -2, 3, -1};
  const LPOutcome a = solve_lp(c, h), b = solve_lp(c, h);
  CHECK(a.status == b.status);
  CHECK(a.witness == b.witness);
  CHECK(a.inequality_multipliers == b.inequality_multipliers);
}

TEST_CASE("lp: a prepared system answers like a fresh solve") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 3;
    HPolyhedron h = random_box_polytope(rng, d, 3);
    if (trial % 4 == 0) h = HPolyhedron(d);  // unbounded in every direction but 0
    if (trial % 5 == 0) h.add_inequality(Row(SparseVector::unit(0), Rational(100)));
    const PreparedLP lp(h);
    for (int k = 0; k < 5; ++k) {
      Vector c(d);
      for (auto& v : c) v = coef(rng);
      for (Sense sense : {Sense::minimize, Sense::maximize}) {
        const LPOutcome fresh = solve_lp(c, h, sense);
        const LPOutcome reused = lp.solve(c, sense);
        CHECK(fresh.status == reused.status);
        if (fresh.status == LPStatus::optimal) CHECK(fresh.value == reused.value);
        CHECK(check_certificate(c, h, sense, reused).empty());
      }
    }
  }
}

TEST_CASE("lp: a prepared infeasible system keeps its Farkas certificate") {
  HPolyhedron h(1);
  h.add_inequality(Row(SparseVector::unit(0), Rational(1)));
  h.add_inequality(Row(SparseVector().plus_scaled(Rational(-1), SparseVector::unit(0)), Rational(0)));
  const PreparedLP lp(h);
  for (int c : {-1, 0, 1}) {
    const LPOutcome out = lp.solve(Vector{Rational(c)});
    CHECK(out.status == LPStatus::infeasible);
    CHECK(is_farkas_certificate(h, out.inequality_multipliers, out.equality_multipliers));
  }
  CHECK_THROWS_AS(lp.solve(Vector{1, 1}), MalformedInput);
}
