#include "xfkit/polyhedral_model.hpp"

#include <algorithm>

#include "xfkit/errors.hpp"
#include "xfkit/lp.hpp"

namespace xfkit {

void require_member(const HPolyhedron& p, const Vector& x, const char* context) {
  if (x.size() != p.dimension())
    throw MalformedInput(std::string(context) + ": point dimension " + std::to_string(x.size()) + " != " +
                         std::to_string(p.dimension()));
  if (auto row = p.first_violation(x))
    throw MembershipError(std::string(context) + ": point " + to_string(x) + " violates " + *row, *row);
}

PointInP::PointInP(std::shared_ptr<const HPolyhedron> host, Vector coordinates)
    : host_(std::move(host)), coordinates_(std::move(coordinates)) {
  require_member(*host_, coordinates_, "PointInP");
}

PointInP::PointInP(const HPolyhedron& host, Vector coordinates)
    : PointInP(std::make_shared<const HPolyhedron>(host), std::move(coordinates)) {}

HPolyhedron radial_cone_h(const HPolyhedron& p, const Vector& v) {
  require_member(p, v, "radial cone");
  HPolyhedron out(p.dimension());
  for (const auto& r : p.inequalities())
    if (r.is_tight(v)) out.add_inequality(r);
  for (const auto& r : p.equalities()) out.add_equality(r);
  return out;
}

VPolyhedron dominant(const VPolyhedron& p) {
  auto nonnegative = [](const Vector& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.sign() >= 0; });
  };
  for (const auto& v : p.vertices())
    if (!nonnegative(v)) throw DomainError("dominant: vertex " + to_string(v) + " has a negative coordinate");
  for (const auto& r : p.rays())
    if (!nonnegative(r)) throw DomainError("dominant: ray " + to_string(r) + " has a negative coordinate");
  const VPolyhedron c = p.canonical();
  VPolyhedron out(p.dimension());
  const auto& vs = c.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < vs.size() && !dominated; ++j) {
      if (i == j) continue;
      bool le = true;
      for (std::size_t k = 0; k < vs[i].size() && le; ++k) le = vs[j][k] <= vs[i][k];
      dominated = le;
    }
    if (!dominated) out.add_vertex(vs[i]);
  }
  out.add_unit_rays();
  return out.canonical();
}

bool is_blocking(const VPolyhedron& p, std::string* reason) {
  auto fail = [reason](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  if (p.empty()) return fail("polyhedron is empty");
  for (const auto& v : p.vertices())
    for (const auto& c : v)
      if (c.sign() < 0) return fail("vertex " + to_string(v) + " is not nonnegative");
  for (const auto& r : p.rays())
    for (const auto& c : r)
      if (c.sign() < 0) return fail("ray " + to_string(r) + " is not nonnegative");
  for (std::size_t j = 0; j < p.dimension(); ++j) {
    const Vector e = unit_vector(p.dimension(), j);
    if (std::find(p.rays().begin(), p.rays().end(), e) == p.rays().end())
      return fail("not closed upwards: unit ray e" + std::to_string(j) + " missing");
  }
  return true;
}

void require_blocking(const VPolyhedron& p) {
  std::string why;
  if (!is_blocking(p, &why)) throw DomainError("not a blocking polyhedron: " + why);
}

HPolyhedron blocker(const VPolyhedron& p) {
  require_blocking(p);
  HPolyhedron out(p.dimension());
  out.add_nonnegativity();
  for (const auto& v : p.vertices()) out.add_inequality(v, Rational(1));
  return out;
}

HPolyhedron polar_face(const HPolyhedron& blocker_h, const Vector& v) {
  if (v.size() != blocker_h.dimension()) throw MalformedInput("polar face: dimension mismatch");
  const LPOutcome out = solve_lp(v, blocker_h);
  if (out.status == LPStatus::unbounded || (out.status == LPStatus::optimal && out.value < 1))
    throw DomainError("polar face: <v,y> >= 1 is not valid over the blocker, so v = " + to_string(v) +
                      " is not in the blocked polyhedron");
  HPolyhedron face = blocker_h;
  face.add_equality(v, Rational(1));
  return face;
}

HPolyhedron tjoin_dominant_h(const EdgeSpace& space) {
  HPolyhedron h(space.edge_count());
  h.add_nonnegativity();
  if (space.n() >= 2)
    for (const auto& c : enumerate_tcuts(space)) h.add_inequality(characteristic_vector(space, c), Rational(1));
  else if (space.terminals().size() % 2 != 0)
    throw DomainError("|T| is odd");
  return h;
}

HPolyhedron tcut_dominant_h(const EdgeSpace& space) {
  HPolyhedron h(space.edge_count());
  h.add_nonnegativity();
  // For T = {} the empty join contributes 0 >= 1: there are no T-cuts.
  for (const auto& j : enumerate_minimal_tjoins(space)) h.add_inequality(characteristic_vector(space, j), Rational(1));
  return h;
}

HPolyhedron face_restrict(const HPolyhedron& p, const std::vector<Row>& rows) {
  std::vector<bool> chosen(p.inequalities().size(), false);
  for (const auto& r : rows) {
    const auto idx = p.find_inequality(r);
    if (!idx) throw MalformedInput("face_restrict: " + describe(r, ">=") + " is not a row of the polyhedron");
    chosen[*idx] = true;
  }
  HPolyhedron out(p.dimension());
  for (std::size_t i = 0; i < p.inequalities().size(); ++i) {
    if (chosen[i]) out.add_equality(p.inequalities()[i]);
    else out.add_inequality(p.inequalities()[i]);
  }
  for (const auto& r : p.equalities()) out.add_equality(r);
  return out;
}

HPolyhedron with_rows(const HPolyhedron& p, const std::vector<Row>& inequalities, const std::vector<Row>& equalities) {
  HPolyhedron out = p;
  for (const auto& r : inequalities) out.add_inequality(r);
  for (const auto& r : equalities) out.add_equality(r);
  return out;
}

}  // namespace xfkit
