#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xfkit/rational.hpp"

namespace xfkit {

struct SparseEntry {
  std::size_t index;
  Rational value;
};

/// Sorted list of nonzero entries. Zeros are never stored.
class SparseVector {
 public:
  SparseVector() = default;

  static SparseVector from_dense(std::span<const Rational> dense);
  /// Unsorted input; entries with equal index are summed.
  static SparseVector from_entries(std::vector<SparseEntry> entries);
  static SparseVector unit(std::size_t index, Rational value = 1);

  /// Appends an entry; index must exceed every stored index. Zeros are skipped.
  void push_back(std::size_t index, Rational value);

  std::span<const SparseEntry> entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  /// One past the largest stored index (0 when empty).
  std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().index + 1; }

  Rational at(std::size_t index) const;
  const Rational* find(std::size_t index) const;

  Vector to_dense(std::size_t dim) const;
  Rational dot(std::span<const Rational> dense) const;
  Rational dot(const SparseVector& other) const;

  /// Returns this + alpha * other.
  SparseVector plus_scaled(const Rational& alpha, const SparseVector& other) const;
  void scale(const Rational& factor);
  /// Adds `offset` to every index.
  SparseVector shifted(std::size_t offset) const;

  std::size_t hash() const;

  friend bool operator==(const SparseVector& a, const SparseVector& b);
  /// Lexicographic order on the dense expansion.
  friend bool operator<(const SparseVector& a, const SparseVector& b);

 private:
  std::vector<SparseEntry> entries_;
};

}  // namespace xfkit
