#include "xfkit/rational.hpp"

#include <stdexcept>

namespace xfkit {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  std::string num_s(num);
  if (num_s.front() == '+') num_s.erase(0, 1);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  Rational r;
  r.value_ = mpq_class(n, d);
  r.value_.canonicalize();
  return r;
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const {
  const std::size_t n = mpz_get_ui(value_.get_num_mpz_t());
  const std::size_t d = mpz_get_ui(value_.get_den_mpz_t());
  const std::size_t s = static_cast<std::size_t>(sign() + 1);
  return (n * 1000003u) ^ (d * 19260817u) ^ s;
}

Rational& Rational::operator+=(const Rational& other) {
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}
Rational& Rational::operator-=(const Rational& other) {
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}
Rational& Rational::operator*=(const Rational& other) {
  mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}
Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

void Rational::sub_mul(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

void Rational::add_mul(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  mpq_add(r.value_.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  return r;
}
Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  mpq_sub(r.value_.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  return r;
}
Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  mpq_mul(r.value_.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  return r;
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  Rational r;
  mpq_div(r.value_.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  return r;
}
Rational operator-(const Rational& a) {
  Rational r;
  mpq_neg(r.value_.get_mpq_t(), a.value_.get_mpq_t());
  return r;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add_mul(a[i], b[i]);
  return s;
}

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v.at(index) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector primitive_integer(std::span<const Rational> v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  }
  Vector out(v.begin(), v.end());
  for (auto& x : out) {
    x *= Rational(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.numerator().get_mpz_t());
  }
  if (g > 1) {
    const Rational div(g);
    for (auto& x : out) x /= div;
  }
  return out;
}

std::string to_string(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].is_integer() ? v[i].numerator().get_str() : v[i].str();
  }
  return s + ")";
}

}  // namespace xfkit
