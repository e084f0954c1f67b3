#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "xfkit/rational.hpp"
#include "xfkit/sparse_vector.hpp"

namespace xfkit {

/// One linear row <coeffs, x> (>= or =) rhs.
struct Row {
  SparseVector coeffs;
  Rational rhs;

  Row() = default;
  Row(SparseVector c, Rational r) : coeffs(std::move(c)), rhs(std::move(r)) {}
  static Row dense(std::span<const Rational> c, Rational r) { return Row(SparseVector::from_dense(c), std::move(r)); }

  Rational lhs(std::span<const Rational> x) const { return coeffs.dot(x); }
  bool is_tight(std::span<const Rational> x) const { return lhs(x) == rhs; }

  friend bool operator==(const Row& a, const Row& b) { return a.rhs == b.rhs && a.coeffs == b.coeffs; }
  friend bool operator<(const Row& a, const Row& b) {
    if (a.coeffs == b.coeffs) return a.rhs < b.rhs;
    return a.coeffs < b.coeffs;
  }
};

/// Scales an inequality by a positive factor to primitive integer form (coefficients and rhs jointly).
Row canonical_inequality(Row row);
/// Primitive integer form with positive leading nonzero coefficient.
Row canonical_equality(Row row);

std::string describe(const Row& row, const char* relation);

/// { x in R^d : <a_i,x> >= b_i, <e_k,x> = f_k }. Rows are stored canonically
/// and duplicates are dropped on insertion.
class HPolyhedron {
 public:
  explicit HPolyhedron(std::size_t dimension = 0) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  const std::vector<Row>& inequalities() const { return inequalities_; }
  const std::vector<Row>& equalities() const { return equalities_; }
  std::size_t row_count() const { return inequalities_.size() + equalities_.size(); }

  /// Returns false if the (canonical) row was already present.
  bool add_inequality(Row row);
  bool add_equality(Row row);
  bool add_inequality(std::span<const Rational> coeffs, Rational rhs) {
    return add_inequality(Row::dense(coeffs, std::move(rhs)));
  }
  bool add_equality(std::span<const Rational> coeffs, Rational rhs) {
    return add_equality(Row::dense(coeffs, std::move(rhs)));
  }
  /// x_j >= 0 for every coordinate.
  void add_nonnegativity();

  /// Index of the canonical form of `row` among the inequalities, if present.
  std::optional<std::size_t> find_inequality(const Row& row) const;

  bool contains(std::span<const Rational> x) const;
  /// Description of the first violated row, or nullopt when x is a member.
  std::optional<std::string> first_violation(std::span<const Rational> x) const;

  /// Same point set, rows sorted lexicographically (for comparisons and stable output).
  HPolyhedron sorted() const;

 private:
  void check_row(const Row& row) const;

  std::size_t dimension_;
  std::vector<Row> inequalities_;
  std::vector<Row> equalities_;
  std::unordered_multimap<std::size_t, std::size_t> inequality_index_;
  std::unordered_multimap<std::size_t, std::size_t> equality_index_;
};

/// conv(vertices) + cone(rays). Rays are kept as primitive integer vectors.
class VPolyhedron {
 public:
  explicit VPolyhedron(std::size_t dimension = 0) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  const std::vector<Vector>& rays() const { return rays_; }
  bool empty() const { return vertices_.empty(); }

  void add_vertex(Vector v);
  /// Zero rays are ignored.
  void add_ray(Vector r);
  void add_unit_rays();

  /// Sorted, duplicate-free.
  VPolyhedron canonical() const;

  friend bool operator==(const VPolyhedron& a, const VPolyhedron& b);

 private:
  std::size_t dimension_;
  std::vector<Vector> vertices_;
  std::vector<Vector> rays_;
};

/// Rational matrix R^{input} -> R^{output}, stored by sparse rows.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t input_dimension, std::vector<SparseVector> rows);

  static LinearMap identity(std::size_t dim);
  /// Selects coordinates [start, start + count) of R^{input}.
  static LinearMap selection(std::size_t input_dimension, std::size_t start, std::size_t count);
  static LinearMap from_dense(std::size_t input_dimension, const std::vector<Vector>& rows);

  std::size_t input_dimension() const { return input_dimension_; }
  std::size_t output_dimension() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }

  Vector apply(std::span<const Rational> x) const;
  /// pi^T y as a sparse vector over the input space.
  SparseVector transpose_apply(std::span<const Rational> y) const;
  /// (after o this)(x) = after(this(x)).
  LinearMap then(const LinearMap& after) const;
  /// The same map viewed on a larger input space, with inputs placed at `offset`.
  LinearMap embedded(std::size_t new_input_dimension, std::size_t offset) const;

  bool is_identity() const;

 private:
  std::size_t input_dimension_ = 0;
  std::vector<SparseVector> rows_;
};

}  // namespace xfkit
