#pragma once

#include <memory>
#include <vector>

#include "xfkit/graph.hpp"
#include "xfkit/polyhedron.hpp"

namespace xfkit {

/// A point checked to lie in its host polyhedron.
class PointInP {
 public:
  /// Throws MembershipError naming the first violated row.
  PointInP(std::shared_ptr<const HPolyhedron> host, Vector coordinates);
  PointInP(const HPolyhedron& host, Vector coordinates);

  const HPolyhedron& host() const { return *host_; }
  const Vector& coordinates() const { return coordinates_; }

 private:
  std::shared_ptr<const HPolyhedron> host_;
  Vector coordinates_;
};

/// Throws MembershipError unless x lies in p.
void require_member(const HPolyhedron& p, const Vector& x, const char* context);

/// Rows of p tight at v, all equalities kept.
HPolyhedron radial_cone_h(const HPolyhedron& p, const Vector& v);
inline HPolyhedron radial_cone_h(const PointInP& v) { return radial_cone_h(v.host(), v.coordinates()); }

/// P + R^d_+ : unit rays added, vertices dominated componentwise by another vertex dropped.
VPolyhedron dominant(const VPolyhedron& p);

/// Throws DomainError unless p is nonempty, has nonnegative generators and every unit ray.
void require_blocking(const VPolyhedron& p);
bool is_blocking(const VPolyhedron& p, std::string* reason = nullptr);

/// { y >= 0 : <x_k,y> >= 1 for every vertex x_k of p }.
HPolyhedron blocker(const VPolyhedron& p);

/// Blocker rows plus <v,y> = 1. Throws DomainError when <v,y> >= 1 is not
/// valid over the blocker (then v is not in the blocked polyhedron).
HPolyhedron polar_face(const HPolyhedron& blocker_h, const Vector& v);

/// x >= 0 and x(C) >= 1 for every T-cut C.
HPolyhedron tjoin_dominant_h(const EdgeSpace& space);
/// x >= 0 and x(J) >= 1 for every minimal T-join J.
HPolyhedron tcut_dominant_h(const EdgeSpace& space);

/// p with the listed inequality rows turned into equalities. Throws
/// MalformedInput if a row is not an inequality of p.
HPolyhedron face_restrict(const HPolyhedron& p, const std::vector<Row>& rows);

/// Copy of p with extra rows appended.
HPolyhedron with_rows(const HPolyhedron& p, const std::vector<Row>& inequalities, const std::vector<Row>& equalities);

}  // namespace xfkit
