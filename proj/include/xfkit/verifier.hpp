#pragma once

#include <memory>
#include <string>
#include <vector>

#include "xfkit/extension.hpp"
#include "xfkit/graph.hpp"
#include "xfkit/lp.hpp"
#include "xfkit/polyhedron.hpp"

namespace xfkit {

enum class ReportStatus { verified, refuted, skipped };
std::string to_string(ReportStatus status);

enum class CertificateKind {
  /// min <a,pi(u)> over the lifted system is >= beta (dual multipliers), or the system is empty (Farkas)
  row_valid,
  /// lifted point or recession direction with pi(u) equal to a target generator
  generator_member,
  /// rows evaluated exactly at every generator of a V-description
  row_valid_over_generators,
  /// refutation: lifted point whose image violates a target row
  row_violated_point,
  /// refutation: lifted recession direction along which a target row decreases
  row_violated_ray,
  /// refutation: Farkas certificate that a target generator has no preimage
  generator_excluded,
  /// refutation: a generator violating a row, by direct evaluation
  generator_violates_row,
};
std::string to_string(CertificateKind kind);
bool is_refutation(CertificateKind kind);

/// Self-contained evidence; replay() re-checks it without solving anything.
struct Certificate {
  CertificateKind kind = CertificateKind::row_valid;
  std::string description;
  std::shared_ptr<const HPolyhedron> system;  // LP system the evidence refers to
  std::shared_ptr<const LinearMap> projection;
  std::shared_ptr<const VPolyhedron> generators;
  Row row;                // the target row (as an inequality)
  bool row_is_ray = false;  // for generator checks: rhs replaced by 0
  Vector objective;       // LP objective over the system (row_valid)
  LPOutcome outcome;      // LP outcome carrying the certificate
  Vector point;           // lifted witness point / direction, or the offending generator
  bool point_is_ray = false;
  Vector generator;       // target generator (generator_member)
};

bool replay(const Certificate& certificate);

struct VerificationReport {
  std::string claim;
  ReportStatus status = ReportStatus::verified;
  std::string detail;
  std::vector<Certificate> certificates;
  std::vector<std::string> witnesses;  // human-readable refutation witnesses
  double seconds = 0;

  bool verified() const { return status == ReportStatus::verified; }
  /// Appends another report's evidence; refutation or skip wins.
  void absorb(VerificationReport other, const std::string& prefix = "");
};

/// Replays every certificate; a refuted report must contain a refutation.
bool replay(const VerificationReport& report);

/// Checks pi(Q) = target, where target_h and target_v describe the same polyhedron.
VerificationReport verify_extension_projects_to(const ExtendedFormulation& ext, const HPolyhedron& target_h,
                                                const VPolyhedron& target_v, const std::string& claim = "projection");
/// One-sided: every row of target_h is valid over pi(Q).
VerificationReport verify_extension_contained_in(const ExtendedFormulation& ext, const HPolyhedron& target_h,
                                                 const std::string& claim = "containment");
/// Every generator of target_v lies in pi(Q).
VerificationReport verify_generators_in(const ExtendedFormulation& ext, const VPolyhedron& target_v,
                                        const std::string& claim = "generators");
/// Two H-descriptions describe the same set (mutual row validity by LP).
VerificationReport verify_h_equal(const HPolyhedron& a, const HPolyhedron& b, const std::string& claim = "equality");

/// Active-row cone at v equals v + cone(P - v).
VerificationReport verify_radial_cone_identity(const HPolyhedron& p, const Vector& v);
/// Both separation identities relating the radial cone at v and the polar face of the blocker.
VerificationReport verify_structure_lemma(const VPolyhedron& p, const Vector& v);
/// Dual transfer of the polar-face extension projects onto the radial cone and
/// vice versa (after restricting to <v,y> = 1), each with exactly one extra row.
VerificationReport verify_dual_transfer(const VPolyhedron& p, const Vector& v);
/// B(B(P)) = P; skipped if p is not a blocking polyhedron.
VerificationReport verify_blocker_involution(const VPolyhedron& p);
/// Blocker of the T-join dominant equals the T-cut dominant.
VerificationReport verify_blocking_duality(const EdgeSpace& space);
/// pi(K_P(v)) = K_{pi(P)}(pi(v)) via double description on both sides.
VerificationReport verify_projection_commutes(const HPolyhedron& p, const Vector& v, const LinearMap& map);
/// K_F(v) = K_P(v) intersected with the face equalities, for F = P with `face_rows` tight.
VerificationReport verify_face_radial_cone(const HPolyhedron& p, const std::vector<Row>& face_rows, const Vector& v);
VerificationReport verify_fm_equals_gm(const EdgeSpace& space, const std::vector<std::size_t>& join, std::size_t m);
VerificationReport verify_q_equals_qtilde(const EdgeSpace& space, const std::vector<Node>& u1);
/// Minimal T-joins covered by the pieces, and each piece inside the T-join dominant.
VerificationReport verify_union_covers(const EdgeSpace& space, const std::vector<ExtendedFormulation>& pieces);
/// Images of all lifted vertices are integral; skipped above the DD cap.
VerificationReport verify_integrality(const ExtendedFormulation& ext);
/// Size equals expected, as a report.
VerificationReport verify_size(const ExtendedFormulation& ext, std::size_t expected, const std::string& claim);

}  // namespace xfkit
