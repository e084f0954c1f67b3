#include "xfkit/sparse_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace xfkit {

SparseVector SparseVector::from_dense(std::span<const Rational> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) v.entries_.push_back({i, dense[i]});
  return v;
}

SparseVector SparseVector::from_entries(std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  SparseVector v;
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().index == e.index) {
      v.entries_.back().value += e.value;
      if (v.entries_.back().value.is_zero()) v.entries_.pop_back();
    } else if (!e.value.is_zero()) {
      v.entries_.push_back(std::move(e));
    }
  }
  return v;
}

SparseVector SparseVector::unit(std::size_t index, Rational value) {
  SparseVector v;
  v.push_back(index, std::move(value));
  return v;
}

void SparseVector::push_back(std::size_t index, Rational value) {
  if (!entries_.empty() && entries_.back().index >= index)
    throw std::invalid_argument("SparseVector::push_back: indices must increase");
  if (!value.is_zero()) entries_.push_back({index, std::move(value)});
}

const Rational* SparseVector::find(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it == entries_.end() || it->index != index) return nullptr;
  return &it->value;
}

Rational SparseVector::at(std::size_t index) const {
  const Rational* p = find(index);
  return p ? *p : Rational();
}

Vector SparseVector::to_dense(std::size_t dim) const {
  if (extent() > dim) throw std::invalid_argument("SparseVector::to_dense: index out of range");
  Vector v(dim);
  for (const auto& e : entries_) v[e.index] = e.value;
  return v;
}

Rational SparseVector::dot(std::span<const Rational> dense) const {
  if (extent() > dense.size()) throw std::invalid_argument("SparseVector::dot: dimension mismatch");
  Rational s;
  for (const auto& e : entries_) s.add_mul(e.value, dense[e.index]);
  return s;
}

Rational SparseVector::dot(const SparseVector& other) const {
  Rational s;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->index < b->index) {
      ++a;
    } else if (b->index < a->index) {
      ++b;
    } else {
      s.add_mul(a->value, b->value);
      ++a;
      ++b;
    }
  }
  return s;
}

SparseVector SparseVector::plus_scaled(const Rational& alpha, const SparseVector& other) const {
  if (alpha.is_zero() || other.empty()) return *this;
  SparseVector out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->index < a->index) {
      out.entries_.push_back({b->index, alpha * b->value});
      ++b;
    } else {
      Rational v = a->value;
      v.add_mul(alpha, b->value);
      if (!v.is_zero()) out.entries_.push_back({a->index, std::move(v)});
      ++a;
      ++b;
    }
  }
  return out;
}

void SparseVector::scale(const Rational& factor) {
  if (factor.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.value *= factor;
}

SparseVector SparseVector::shifted(std::size_t offset) const {
  SparseVector out = *this;
  for (auto& e : out.entries_) e.index += offset;
  return out;
}

std::size_t SparseVector::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& e : entries_) {
    h ^= e.index * 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
    h ^= e.value.hash();
    h *= 1099511628211ull;
  }
  return h;
}

bool operator==(const SparseVector& a, const SparseVector& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i].index != b.entries_[i].index || a.entries_[i].value != b.entries_[i].value) return false;
  return true;
}

bool operator<(const SparseVector& a, const SparseVector& b) {
  auto x = a.entries_.begin();
  auto y = b.entries_.begin();
  while (x != a.entries_.end() || y != b.entries_.end()) {
    // The first index where the dense expansions differ decides.
    if (y == b.entries_.end() || (x != a.entries_.end() && x->index < y->index))
      return x->value.sign() < 0;
    if (x == a.entries_.end() || y->index < x->index) return y->value.sign() > 0;
    if (x->value != y->value) return x->value < y->value;
    ++x;
    ++y;
  }
  return false;
}

}  // namespace xfkit
