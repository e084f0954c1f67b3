#include "doctest.h"
#include "xfkit/rational.hpp"
#include "xfkit/sparse_vector.hpp"

#include <random>

using xfkit::Rational;
using xfkit::SparseVector;

TEST_CASE("rational values stay in lowest terms") {
  Rational a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(a.denominator() == 2);
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0").str() == "0/1");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational arithmetic matches cross-multiplication") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  for (int i = 0; i < 500; ++i) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational sum = Rational(a, b) + Rational(c, d);
    CHECK(sum == Rational(a * d + c * b, b * d));
    const Rational prod = Rational(a, b) * Rational(c, d);
    CHECK(prod == Rational(a * c, b * d));
    CHECK(sum.denominator() > 0);
    Rational acc(a, b);
    acc.add_mul(Rational(c, d), Rational(3));
    CHECK(acc == Rational(a, b) + Rational(3 * c, d));
  }
}

TEST_CASE("primitive integer scaling") {
  const xfkit::Vector v{Rational(1, 2), Rational(-3, 4), Rational(0)};
  CHECK(xfkit::primitive_integer(v) == xfkit::Vector{Rational(2), Rational(-3), Rational(0)});
}

TEST_CASE("sparse vectors merge and compare") {
  const SparseVector a = SparseVector::from_dense(xfkit::Vector{1, 0, 2});
  const SparseVector b = SparseVector::from_entries({{2, Rational(-2)}, {1, Rational(5)}});
  const SparseVector s = a.plus_scaled(Rational(1), b);
  CHECK(s.nnz() == 2);
  CHECK(s.at(0) == 1);
  CHECK(s.at(1) == 5);
  CHECK(s.find(2) == nullptr);
  CHECK(a.dot(b) == -4);
  CHECK(s.shifted(3).extent() == 5);
}
