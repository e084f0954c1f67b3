#include "xfkit/polyhedron.hpp"

#include <algorithm>

#include "xfkit/errors.hpp"

namespace xfkit {

namespace {

// Positive factor turning (coeffs, rhs) into a primitive integer vector.
Rational primitive_factor(const Row& row) {
  mpz_class l = 1, g = 0, tmp;
  auto fold_den = [&](const Rational& x) {
    if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  };
  for (const auto& e : row.coeffs.entries()) fold_den(e.value);
  fold_den(row.rhs);
  auto fold_num = [&](const Rational& x) {
    if (x.is_zero()) return;
    tmp = x.numerator() * (l / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tmp.get_mpz_t());
  };
  for (const auto& e : row.coeffs.entries()) fold_num(e.value);
  fold_num(row.rhs);
  if (g == 0) return Rational(1);
  return Rational(mpq_class(l, g));
}

std::size_t row_hash(const Row& row) { return row.coeffs.hash() * 31u ^ row.rhs.hash(); }

}  // namespace

Row canonical_inequality(Row row) {
  const Rational f = primitive_factor(row);
  if (f != Rational(1)) {
    row.coeffs.scale(f);
    row.rhs *= f;
  }
  return row;
}

Row canonical_equality(Row row) {
  row = canonical_inequality(std::move(row));
  const int lead = row.coeffs.empty() ? row.rhs.sign() : row.coeffs.entries().front().value.sign();
  if (lead < 0) {
    row.coeffs.scale(Rational(-1));
    row.rhs = -row.rhs;
  }
  return row;
}

std::string describe(const Row& row, const char* relation) {
  std::string s;
  for (const auto& e : row.coeffs.entries()) {
    if (!s.empty()) s += " ";
    const bool neg = e.value.sign() < 0;
    if (!s.empty() || neg) s += neg ? "- " : "+ ";
    const Rational mag = abs(e.value);
    if (mag != Rational(1)) s += (mag.is_integer() ? mag.numerator().get_str() : mag.str()) + "*";
    s += "x" + std::to_string(e.index);
  }
  if (s.empty()) s = "0";
  s += std::string(" ") + relation + " ";
  s += row.rhs.is_integer() ? row.rhs.numerator().get_str() : row.rhs.str();
  return s;
}

void HPolyhedron::check_row(const Row& row) const {
  if (row.coeffs.extent() > dimension_)
    throw MalformedInput("row index " + std::to_string(row.coeffs.extent() - 1) + " outside dimension " +
                         std::to_string(dimension_));
}

bool HPolyhedron::add_inequality(Row row) {
  check_row(row);
  row = canonical_inequality(std::move(row));
  const std::size_t h = row_hash(row);
  auto [lo, hi] = inequality_index_.equal_range(h);
  for (auto it = lo; it != hi; ++it)
    if (inequalities_[it->second] == row) return false;
  inequality_index_.emplace(h, inequalities_.size());
  inequalities_.push_back(std::move(row));
  return true;
}

bool HPolyhedron::add_equality(Row row) {
  check_row(row);
  row = canonical_equality(std::move(row));
  const std::size_t h = row_hash(row);
  auto [lo, hi] = equality_index_.equal_range(h);
  for (auto it = lo; it != hi; ++it)
    if (equalities_[it->second] == row) return false;
  equality_index_.emplace(h, equalities_.size());
  equalities_.push_back(std::move(row));
  return true;
}

void HPolyhedron::add_nonnegativity() {
  for (std::size_t j = 0; j < dimension_; ++j) add_inequality(Row(SparseVector::unit(j), Rational(0)));
}

std::optional<std::size_t> HPolyhedron::find_inequality(const Row& row) const {
  const Row c = canonical_inequality(row);
  auto [lo, hi] = inequality_index_.equal_range(row_hash(c));
  for (auto it = lo; it != hi; ++it)
    if (inequalities_[it->second] == c) return it->second;
  return std::nullopt;
}

bool HPolyhedron::contains(std::span<const Rational> x) const { return !first_violation(x).has_value(); }

std::optional<std::string> HPolyhedron::first_violation(std::span<const Rational> x) const {
  if (x.size() != dimension_)
    throw MalformedInput("point dimension " + std::to_string(x.size()) + " != " + std::to_string(dimension_));
  for (const auto& r : inequalities_)
    if (r.lhs(x) < r.rhs) return describe(r, ">=");
  for (const auto& r : equalities_)
    if (r.lhs(x) != r.rhs) return describe(r, "=");
  return std::nullopt;
}

HPolyhedron HPolyhedron::sorted() const {
  std::vector<Row> ineq = inequalities_, eq = equalities_;
  std::sort(ineq.begin(), ineq.end());
  std::sort(eq.begin(), eq.end());
  HPolyhedron out(dimension_);
  for (auto& r : ineq) out.add_inequality(std::move(r));
  for (auto& r : eq) out.add_equality(std::move(r));
  return out;
}

void VPolyhedron::add_vertex(Vector v) {
  if (v.size() != dimension_) throw MalformedInput("vertex dimension mismatch");
  vertices_.push_back(std::move(v));
}

void VPolyhedron::add_ray(Vector r) {
  if (r.size() != dimension_) throw MalformedInput("ray dimension mismatch");
  if (is_zero(r)) return;
  rays_.push_back(primitive_integer(r));
}

void VPolyhedron::add_unit_rays() {
  for (std::size_t j = 0; j < dimension_; ++j) add_ray(unit_vector(dimension_, j));
}

VPolyhedron VPolyhedron::canonical() const {
  VPolyhedron out(dimension_);
  out.vertices_ = vertices_;
  out.rays_ = rays_;
  std::sort(out.vertices_.begin(), out.vertices_.end());
  out.vertices_.erase(std::unique(out.vertices_.begin(), out.vertices_.end()), out.vertices_.end());
  std::sort(out.rays_.begin(), out.rays_.end());
  out.rays_.erase(std::unique(out.rays_.begin(), out.rays_.end()), out.rays_.end());
  return out;
}

bool operator==(const VPolyhedron& a, const VPolyhedron& b) {
  return a.dimension_ == b.dimension_ && a.vertices_ == b.vertices_ && a.rays_ == b.rays_;
}

LinearMap::LinearMap(std::size_t input_dimension, std::vector<SparseVector> rows)
    : input_dimension_(input_dimension), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.extent() > input_dimension_) throw MalformedInput("LinearMap: row exceeds input dimension");
}

LinearMap LinearMap::identity(std::size_t dim) { return selection(dim, 0, dim); }

LinearMap LinearMap::selection(std::size_t input_dimension, std::size_t start, std::size_t count) {
  if (start + count > input_dimension) throw MalformedInput("LinearMap::selection out of range");
  std::vector<SparseVector> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) rows.push_back(SparseVector::unit(start + i));
  return LinearMap(input_dimension, std::move(rows));
}

LinearMap LinearMap::from_dense(std::size_t input_dimension, const std::vector<Vector>& rows) {
  std::vector<SparseVector> sparse;
  for (const auto& r : rows) {
    if (r.size() != input_dimension) throw MalformedInput("LinearMap: row length mismatch");
    sparse.push_back(SparseVector::from_dense(r));
  }
  return LinearMap(input_dimension, std::move(sparse));
}

Vector LinearMap::apply(std::span<const Rational> x) const {
  if (x.size() != input_dimension_) throw MalformedInput("LinearMap::apply: dimension mismatch");
  Vector out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.dot(x));
  return out;
}

SparseVector LinearMap::transpose_apply(std::span<const Rational> y) const {
  if (y.size() != rows_.size()) throw MalformedInput("LinearMap::transpose_apply: dimension mismatch");
  std::vector<SparseEntry> acc;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (y[i].is_zero()) continue;
    for (const auto& e : rows_[i].entries()) acc.push_back({e.index, y[i] * e.value});
  }
  return SparseVector::from_entries(std::move(acc));
}

LinearMap LinearMap::then(const LinearMap& after) const {
  if (after.input_dimension_ != output_dimension()) throw MalformedInput("LinearMap::then: dimension mismatch");
  std::vector<SparseVector> rows;
  rows.reserve(after.rows_.size());
  for (const auto& ar : after.rows_) {
    std::vector<SparseEntry> acc;
    for (const auto& e : ar.entries())
      for (const auto& f : rows_[e.index].entries()) acc.push_back({f.index, e.value * f.value});
    rows.push_back(SparseVector::from_entries(std::move(acc)));
  }
  return LinearMap(input_dimension_, std::move(rows));
}

LinearMap LinearMap::embedded(std::size_t new_input_dimension, std::size_t offset) const {
  if (offset + input_dimension_ > new_input_dimension) throw MalformedInput("LinearMap::embedded out of range");
  std::vector<SparseVector> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(r.shifted(offset));
  return LinearMap(new_input_dimension, std::move(rows));
}

bool LinearMap::is_identity() const {
  if (input_dimension_ != rows_.size()) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].nnz() != 1 || rows_[i].entries()[0].index != i || rows_[i].entries()[0].value != Rational(1))
      return false;
  return true;
}

}  // namespace xfkit
