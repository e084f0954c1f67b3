#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "xfkit/polyhedron.hpp"
#include "xfkit/rational.hpp"

namespace xfkit {

enum class Sense { minimize, maximize };
enum class LPStatus { optimal, infeasible, unbounded };

std::string to_string(LPStatus status);

struct LPProblem {
  Vector objective;
  HPolyhedron constraints;
  Sense sense = Sense::minimize;
};

/// Exact result of an LP solve, with certificates.
///
/// Multipliers refer to the *minimization* form (the objective is negated for
/// maximize): one entry per inequality row (always >= 0) and one per equality
/// row (free).
///   optimal    : A^T y + E^T z = c  and  b.y + e.z = value (dual certificate)
///   infeasible : A^T y + E^T z = 0  and  b.y + e.z > 0     (Farkas certificate)
///   unbounded  : `ray` satisfies A r >= 0, E r = 0 and c.r < 0
struct LPOutcome {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  Vector witness;
  Vector ray;
  Vector inequality_multipliers;
  Vector equality_multipliers;
  std::size_t pivots = 0;
};

enum class PricingRule {
  /// Smallest-index entering column everywhere.
  bland,
  /// Most negative reduced cost; falls back to Bland during degenerate streaks.
  dantzig_bland_fallback,
};

struct LPOptions {
  PricingRule pricing = PricingRule::dantzig_bland_fallback;
  /// consecutive degenerate pivots before switching to Bland's rule
  std::size_t degenerate_streak = 8;
  /// re-verify every certificate before returning (cheap relative to the solve)
  bool self_check = true;
};

/// Solves min/max <c,x> over an HPolyhedron. All variables are free; sign
/// constraints must be explicit rows. Throws MalformedInput on dimension mismatch.
LPOutcome solve_lp(const Vector& objective, const HPolyhedron& constraints, Sense sense = Sense::minimize,
                   const LPOptions& options = {});
LPOutcome solve_lp(const LPProblem& problem, const LPOptions& options = {});

namespace detail {
class Simplex;
}

/// A constraint system with phase I already solved, for many objectives over
/// the same rows. solve() is const and safe to call from several threads.
class PreparedLP {
 public:
  explicit PreparedLP(HPolyhedron constraints, const LPOptions& options = {});
  LPOutcome solve(const Vector& objective, Sense sense = Sense::minimize) const;
  const HPolyhedron& constraints() const { return *constraints_; }
  const std::shared_ptr<const HPolyhedron>& shared_constraints() const { return constraints_; }

 private:
  std::shared_ptr<const HPolyhedron> constraints_;
  LPOptions options_;
  std::shared_ptr<const detail::Simplex> prepared_;
};

/// Independent re-check of an outcome's certificate against the problem.
/// Returns an empty string when valid, else a description of what failed.
std::string check_certificate(const Vector& objective, const HPolyhedron& constraints, Sense sense,
                              const LPOutcome& outcome);

/// Farkas check: y >= 0 on inequalities, A^T y + E^T z = 0, b.y + e.z > 0.
bool is_farkas_certificate(const HPolyhedron& constraints, const Vector& inequality_multipliers,
                           const Vector& equality_multipliers);

}  // namespace xfkit
