#include "xfkit/double_description.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "xfkit/errors.hpp"
#include "xfkit/linalg.hpp"

namespace xfkit {

std::size_t dimension_cap() {
  if (const char* env = std::getenv("XFKIT_DIM_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw MalformedInput(std::string("XFKIT_DIM_CAP is not a number: ") + env);
    }
  }
  return 30;
}

namespace {

using IntVector = std::vector<mpz_class>;

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.words_.resize(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  bool contains(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct DDRay {
  IntVector coords;
  Bits zeros;
};

IntVector to_integer(const Vector& v) {
  const Vector p = primitive_integer(v);
  IntVector out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(x.numerator());
  return out;
}

void make_primitive(IntVector& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

mpz_class int_dot(const IntVector& a, const IntVector& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Vector to_rational(const IntVector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

// Pointed cone { w : <g_i,w> >= 0 } whose rows have full column rank.
std::vector<IntVector> pointed_extreme_rays(const std::vector<IntVector>& rows, std::size_t dim) {
  if (dim == 0) return {};
  std::vector<Vector> rational_rows;
  for (const auto& r : rows) rational_rows.push_back(to_rational(r));
  const RowEchelon echelon = reduce(rational_rows, dim);
  if (echelon.pivots.size() != dim) throw std::logic_error("pointed_extreme_rays: rows are rank deficient");

  // Initial simplicial cone: columns of the inverse of the chosen basis rows.
  std::vector<Vector> aug;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector row = rational_rows[echelon.source[i]];
    row.resize(2 * dim);
    row[dim + i] = 1;
    aug.push_back(std::move(row));
  }
  const RowEchelon inv = reduce(aug, 2 * dim);
  const std::size_t m = rows.size();
  std::vector<bool> processed(m, false);
  std::vector<DDRay> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Vector col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = inv.rows[i][dim + j];
    DDRay r{to_integer(col), Bits(m)};
    for (std::size_t i = 0; i < dim; ++i)
      if (i != j) r.zeros.set(echelon.source[i]);
    rays.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < dim; ++i) processed[echelon.source[i]] = true;

  for (std::size_t h = 0; h < m; ++h) {
    if (processed[h]) continue;
    std::vector<mpz_class> value(rays.size());
    std::vector<std::size_t> plus, minus;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = int_dot(rows[h], rays[r].coords);
      const int s = sgn(value[r]);
      if (s > 0) plus.push_back(r);
      else if (s < 0) minus.push_back(r);
    }
    processed[h] = true;
    if (minus.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (sgn(value[r]) == 0) rays[r].zeros.set(h);
      continue;
    }
    std::vector<DDRay> next;
    for (std::size_t p : plus)
      for (std::size_t n : minus) {
        const Bits common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != n && rays[r].zeros.contains(common)) adjacent = false;
        if (!adjacent) continue;
        DDRay fresh{IntVector(dim), common};
        for (std::size_t k = 0; k < dim; ++k)
          fresh.coords[k] = value[p] * rays[n].coords[k] - value[n] * rays[p].coords[k];
        make_primitive(fresh.coords);
        fresh.zeros.set(h);
        next.push_back(std::move(fresh));
      }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      const int s = sgn(value[r]);
      if (s < 0) continue;
      if (s == 0) rays[r].zeros.set(h);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
    if (rays.empty()) break;
  }
  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.coords));
  return out;
}

Vector combine(const std::vector<Vector>& basis, const Vector& coeffs, std::size_t dim) {
  Vector out(dim);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    for (std::size_t i = 0; i < dim; ++i) out[i].add_mul(coeffs[j], basis[j][i]);
  }
  return out;
}

void check_cap(std::size_t dimension, const DDOptions& options) {
  const std::size_t cap = options.cap.value_or(dimension_cap());
  if (dimension > cap) throw DimensionCapExceeded(dimension, cap);
}

}  // namespace

ConeGenerators cone_generators(const std::vector<Vector>& inequalities, const std::vector<Vector>& equalities,
                               std::size_t dimension) {
  ConeGenerators out;
  // z = N u parametrizes the equality subspace.
  const std::vector<Vector> n_basis = null_space(equalities, dimension);
  const std::size_t k = n_basis.size();
  if (k == 0) return out;
  std::vector<Vector> g1;
  for (const auto& g : inequalities) {
    Vector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(g, n_basis[j]);
    g1.push_back(std::move(row));
  }
  // Lineality of the parametrized cone, then u = W w restricted to its complement.
  const std::vector<Vector> lin = null_space(g1, k);
  for (const auto& l : lin) out.lineality.push_back(primitive_integer(combine(n_basis, l, dimension)));
  std::vector<Vector> w_basis;
  if (lin.empty()) {
    for (std::size_t j = 0; j < k; ++j) w_basis.push_back(unit_vector(k, j));
  } else {
    w_basis = null_space(lin, k);
  }
  const std::size_t k2 = w_basis.size();
  std::vector<IntVector> g2;
  for (const auto& g : g1) {
    Vector row(k2);
    for (std::size_t j = 0; j < k2; ++j) row[j] = dot(g, w_basis[j]);
    if (is_zero(row)) continue;
    g2.push_back(to_integer(row));
  }
  for (const auto& w : pointed_extreme_rays(g2, k2)) {
    const Vector u = combine(w_basis, to_rational(w), k);
    out.rays.push_back(primitive_integer(combine(n_basis, u, dimension)));
  }
  return out;
}

VPolyhedron h_to_v(const HPolyhedron& p, const DDOptions& options) {
  const std::size_t d = p.dimension();
  check_cap(d, options);
  std::vector<Vector> ineq, eq;
  for (const auto& r : p.inequalities()) {
    Vector row = r.coeffs.to_dense(d + 1);
    row[d] = -r.rhs;
    ineq.push_back(std::move(row));
  }
  ineq.push_back(unit_vector(d + 1, d));
  for (const auto& r : p.equalities()) {
    Vector row = r.coeffs.to_dense(d + 1);
    row[d] = -r.rhs;
    eq.push_back(std::move(row));
  }
  const ConeGenerators gens = cone_generators(ineq, eq, d + 1);
  VPolyhedron out(d);
  for (const auto& g : gens.rays) {
    Vector x(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(d));
    if (g[d].sign() > 0) {
      for (auto& c : x) c /= g[d];
      out.add_vertex(std::move(x));
    }
  }
  if (out.empty()) return out;
  for (const auto& g : gens.rays)
    if (g[d].is_zero()) out.add_ray(Vector(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(d)));
  for (const auto& l : gens.lineality) {
    Vector x(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(d));
    Vector neg(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
    out.add_ray(std::move(x));
    out.add_ray(std::move(neg));
  }
  return out.canonical();
}

HPolyhedron v_to_h(const VPolyhedron& p, const DDOptions& options) {
  const std::size_t d = p.dimension();
  check_cap(d, options);
  HPolyhedron out(d);
  if (p.empty()) {
    out.add_inequality(Row(SparseVector(), Rational(1)));
    return out;
  }
  std::vector<Vector> rows;
  for (const auto& v : p.vertices()) {
    Vector row(v);
    row.push_back(Rational(1));
    rows.push_back(std::move(row));
  }
  for (const auto& r : p.rays()) {
    Vector row(r);
    row.push_back(Rational(0));
    rows.push_back(std::move(row));
  }
  const ConeGenerators gens = cone_generators(rows, {}, d + 1);
  auto split = [d](const Vector& g) {
    return Row(SparseVector::from_dense(std::span<const Rational>(g.data(), d)), -g[d]);
  };
  for (const auto& g : gens.rays) {
    Row row = split(g);
    if (row.coeffs.empty()) continue;
    out.add_inequality(std::move(row));
  }
  for (const auto& l : gens.lineality) out.add_equality(split(l));
  return out.sorted();
}

}  // namespace xfkit
