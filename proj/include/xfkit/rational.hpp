#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xfkit {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every operation).
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}
  Rational(long value) : value_(value) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& value) : value_(value) {}
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input or q = 0.
  static Rational parse(std::string_view text);

  /// Always "p/q", e.g. "3/1", "-1/2", "0/1".
  std::string str() const;

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  std::size_t hash() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  /// *this -= a * b without a named temporary at the call site.
  void sub_mul(const Rational& a, const Rational& b);
  void add_mul(const Rational& a, const Rational& b);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);

using Vector = std::vector<Rational>;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector unit_vector(std::size_t dim, std::size_t index);
bool is_zero(std::span<const Rational> v);

/// Scales v by a positive factor so that it is a primitive integer vector.
/// The zero vector is returned unchanged.
Vector primitive_integer(std::span<const Rational> v);

std::string to_string(std::span<const Rational> v);

}  // namespace xfkit
