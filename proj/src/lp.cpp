#include "xfkit/lp.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "xfkit/errors.hpp"

namespace xfkit {

std::string to_string(LPStatus status) {
  switch (status) {
    case LPStatus::optimal:
      return "optimal";
    case LPStatus::infeasible:
      return "infeasible";
    case LPStatus::unbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

constexpr std::size_t kNoColumn = std::numeric_limits<std::size_t>::max();

// Tableau over columns [x (free) | slacks | artificials]. Original inequality
// row i reads <a_i,x> - s_i = b_i; equality rows have no slack. Every row also
// carries `track`, its expression as a combination of the original rows, which
// is what turns the final objective row into dual/Farkas multipliers.
struct TableauRow {
  SparseVector coeffs;
  Rational rhs;
  SparseVector track;
  std::size_t basic = kNoColumn;
};

// Reduced costs with the invariant  objective = offset + sum_j cost[j]*col_j
// for nonbasic columns, and cost = c - sum_i y_i * original_row_i with y = -track.
struct ObjectiveRow {
  Vector cost;
  Rational offset;
  Vector track;

  void eliminate(std::size_t column, const TableauRow& row) {
    const Rational f = cost[column];
    if (f.is_zero()) return;
    for (const auto& e : row.coeffs.entries()) cost[e.index].sub_mul(f, e.value);
    offset.add_mul(f, row.rhs);
    for (const auto& e : row.track.entries()) track[e.index].sub_mul(f, e.value);
  }
};

}  // namespace

namespace detail {

class Simplex {
 public:
  Simplex(const HPolyhedron& constraints, const LPOptions& options)
      : options_(options),
        dim_(constraints.dimension()),
        m1_(constraints.inequalities().size()),
        m2_(constraints.equalities().size()) {
    columns_ = dim_ + m1_;
    rows_.reserve(m1_ + m2_);
    for (std::size_t i = 0; i < m1_; ++i) {
      const Row& r = constraints.inequalities()[i];
      TableauRow t;
      t.coeffs = r.coeffs.plus_scaled(Rational(-1), SparseVector::unit(dim_ + i));
      t.rhs = r.rhs;
      t.track = SparseVector::unit(i);
      rows_.push_back(std::move(t));
    }
    for (std::size_t k = 0; k < m2_; ++k) {
      const Row& r = constraints.equalities()[k];
      TableauRow t;
      t.coeffs = r.coeffs;
      t.rhs = r.rhs;
      t.track = SparseVector::unit(m1_ + k);
      rows_.push_back(std::move(t));
    }
    phase2_.cost = Vector(columns_);
    phase2_.track = Vector(m1_ + m2_);
  }

  /// Free-column elimination and phase I; independent of the objective.
  void prepare() {
    eliminate_free_columns();
    if (auto farkas = drop_zero_rows()) {
      farkas_ = std::move(farkas);
      return;
    }
    if (!phase_one()) {
      farkas_ = negated(phase1_->track);
      return;
    }
    drive_out_artificials();
    phase1_.reset();
  }

  /// Phase II from the prepared basis. Consumes the tableau.
  LPOutcome optimize(const Vector& objective) {
    if (farkas_) return infeasible(*farkas_);
    LPOutcome out;
    // Price out the basis: defining rows in elimination order, then the active rows.
    phase2_.cost = Vector(columns_);
    for (std::size_t j = 0; j < dim_; ++j) phase2_.cost[j] = objective[j];
    phase2_.offset = Rational();
    phase2_.track = Vector(m1_ + m2_);
    for (std::size_t r : elimination_order_) phase2_.eliminate(rows_[r].basic, rows_[r]);
    for (std::size_t r : active_) phase2_.eliminate(rows_[r].basic, rows_[r]);

    for (std::size_t j = 0; j < dim_; ++j) {
      if (unpivoted_[j] && !phase2_.cost[j].is_zero()) {
        Vector dir(columns_);
        dir[j] = phase2_.cost[j].sign() > 0 ? Rational(-1) : Rational(1);
        return unbounded(dir);
      }
    }
    const auto status = iterate(phase2_, dim_ + m1_);
    if (status.has_value()) {
      Vector dir(columns_);
      dir[*status] = 1;
      for (std::size_t r : active_) {
        const Rational* t = rows_[r].coeffs.find(*status);
        if (t) dir[rows_[r].basic] = -*t;
      }
      return unbounded(dir);
    }

    Vector values(columns_);
    for (std::size_t r : active_) values[rows_[r].basic] = rows_[r].rhs;
    back_substitute(values, false);
    out.status = LPStatus::optimal;
    out.witness.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(dim_));
    out.value = phase2_.offset;
    split_multipliers(negated(phase2_.track), out);
    out.pivots = pivots_;
    return out;
  }

 private:
  static Vector negated(const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
  }

  void split_multipliers(const Vector& y, LPOutcome& out) const {
    out.inequality_multipliers.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m1_));
    out.equality_multipliers.assign(y.begin() + static_cast<std::ptrdiff_t>(m1_), y.end());
  }

  LPOutcome infeasible(const Vector& y) {
    LPOutcome out;
    out.status = LPStatus::infeasible;
    split_multipliers(y, out);
    out.pivots = pivots_;
    return out;
  }

  LPOutcome unbounded(Vector dir) {
    back_substitute(dir, true);
    LPOutcome out;
    out.status = LPStatus::unbounded;
    out.ray.assign(dir.begin(), dir.begin() + static_cast<std::ptrdiff_t>(dim_));
    out.pivots = pivots_;
    return out;
  }

  // Gaussian elimination of the free columns. Pivot rows become "defining"
  // rows and leave the active set; they are only used for back substitution.
  void eliminate_free_columns() {
    unpivoted_.assign(dim_, false);
    std::vector<bool> defining(rows_.size(), false);
    for (std::size_t j = 0; j < dim_; ++j) {
      std::size_t best = kNoColumn;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (defining[r] || !rows_[r].coeffs.find(j)) continue;
        if (best == kNoColumn || rows_[r].coeffs.nnz() < rows_[best].coeffs.nnz()) best = r;
      }
      if (best == kNoColumn) {
        unpivoted_[j] = true;
        continue;
      }
      normalize(best, j);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (!defining[r] && r != best) eliminate_row(r, best, j);
      phase2_.eliminate(j, rows_[best]);
      rows_[best].basic = j;
      defining[best] = true;
      elimination_order_.push_back(best);
    }
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!defining[r]) active_.push_back(r);
  }

  // Rows reduced to 0 = rhs. Those combine equality rows only, so a nonzero
  // rhs yields a Farkas certificate directly.
  std::optional<Vector> drop_zero_rows() {
    std::vector<std::size_t> kept;
    for (std::size_t r : active_) {
      const TableauRow& row = rows_[r];
      if (!row.coeffs.empty()) {
        kept.push_back(r);
        continue;
      }
      if (row.rhs.is_zero()) continue;
      Vector y = row.track.to_dense(m1_ + m2_);
      if (row.rhs.sign() < 0)
        for (auto& v : y) v = -v;
      return y;
    }
    active_ = std::move(kept);
    return std::nullopt;
  }

  // Returns false when the system is infeasible (phase1_ then holds the Farkas track).
  bool phase_one() {
    std::vector<std::size_t> count(columns_, 0);
    for (std::size_t r : active_)
      for (const auto& e : rows_[r].coeffs.entries()) ++count[e.index];
    std::vector<bool> used(columns_, false);
    std::vector<std::size_t> artificial_rows;
    for (std::size_t r : active_) {
      TableauRow& row = rows_[r];
      if (row.rhs.sign() < 0) {
        row.coeffs.scale(Rational(-1));
        row.rhs = -row.rhs;
        row.track.scale(Rational(-1));
      }
      std::size_t chosen = kNoColumn;
      for (const auto& e : row.coeffs.entries()) {
        if (count[e.index] == 1 && e.value.sign() > 0 && !used[e.index]) {
          chosen = e.index;
          break;
        }
      }
      if (chosen != kNoColumn) {
        used[chosen] = true;
        normalize(r, chosen);
        row.basic = chosen;
      } else {
        artificial_rows.push_back(r);
      }
    }
    if (artificial_rows.empty()) return true;

    first_artificial_ = columns_;
    columns_ += artificial_rows.size();
    phase2_.cost.resize(columns_);
    phase1_.emplace();
    phase1_->cost = Vector(columns_);
    phase1_->track = Vector(m1_ + m2_);
    for (std::size_t k = 0; k < artificial_rows.size(); ++k) {
      TableauRow& row = rows_[artificial_rows[k]];
      row.coeffs.push_back(first_artificial_ + k, Rational(1));
      row.basic = first_artificial_ + k;
      phase1_->cost[first_artificial_ + k] = 1;
      phase1_->eliminate(first_artificial_ + k, row);
    }
    const auto unbounded_column = iterate(*phase1_, columns_);
    if (unbounded_column.has_value()) throw std::logic_error("phase one cannot be unbounded");
    return phase1_->offset.is_zero();
  }

  void drive_out_artificials() {
    if (first_artificial_ == kNoColumn) return;
    std::vector<std::size_t> kept;
    for (std::size_t r : active_) {
      if (rows_[r].basic < first_artificial_) {
        kept.push_back(r);
        continue;
      }
      std::size_t column = kNoColumn;
      for (const auto& e : rows_[r].coeffs.entries()) {
        if (e.index < first_artificial_) {
          column = e.index;
          break;
        }
      }
      if (column == kNoColumn) continue;  // redundant row
      pivot(r, column);
      kept.push_back(r);
    }
    active_ = std::move(kept);
    // Artificial columns are nonbasic at zero from here on and never re-enter.
    for (std::size_t r : active_) {
      SparseVector trimmed;
      for (const auto& e : rows_[r].coeffs.entries())
        if (e.index < first_artificial_) trimmed.push_back(e.index, e.value);
      rows_[r].coeffs = std::move(trimmed);
    }
  }

  void normalize(std::size_t r, std::size_t column) {
    TableauRow& row = rows_[r];
    const Rational piv = row.coeffs.at(column);
    if (piv == Rational(1)) return;
    const Rational inv = Rational(1) / piv;
    row.coeffs.scale(inv);
    row.rhs *= inv;
    row.track.scale(inv);
  }

  void eliminate_row(std::size_t target, std::size_t source, std::size_t column) {
    const Rational* t = rows_[target].coeffs.find(column);
    if (!t) return;
    const Rational f = -*t;
    TableauRow& row = rows_[target];
    row.coeffs = row.coeffs.plus_scaled(f, rows_[source].coeffs);
    row.rhs.add_mul(f, rows_[source].rhs);
    row.track = row.track.plus_scaled(f, rows_[source].track);
  }

  void pivot(std::size_t r, std::size_t column) {
    normalize(r, column);
    for (std::size_t k : active_)
      if (k != r) eliminate_row(k, r, column);
    phase2_.eliminate(column, rows_[r]);
    if (phase1_) phase1_->eliminate(column, rows_[r]);
    rows_[r].basic = column;
    ++pivots_;
  }

  // Runs simplex iterations on `obj` over candidate columns [dim_, limit).
  // Returns the entering column if the problem is unbounded along it.
  std::optional<std::size_t> iterate(ObjectiveRow& obj, std::size_t limit) {
    std::size_t degenerate_run = 0;
    for (;;) {
      const bool use_bland =
          options_.pricing == PricingRule::bland || degenerate_run >= options_.degenerate_streak;
      std::size_t entering = kNoColumn;
      for (std::size_t j = dim_; j < limit; ++j) {
        if (obj.cost[j].sign() >= 0) continue;
        if (entering == kNoColumn) {
          entering = j;
          if (use_bland) break;
        } else if (obj.cost[j] < obj.cost[entering]) {
          entering = j;
        }
      }
      if (entering == kNoColumn) return std::nullopt;

      std::size_t leave = kNoColumn;
      Rational best;
      for (std::size_t r : active_) {
        const Rational* t = rows_[r].coeffs.find(entering);
        if (!t || t->sign() <= 0) continue;
        Rational ratio = rows_[r].rhs / *t;
        if (leave == kNoColumn || ratio < best || (ratio == best && rows_[r].basic < rows_[leave].basic)) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == kNoColumn) return entering;
      degenerate_run = rows_[leave].rhs.is_zero() ? degenerate_run + 1 : 0;
      pivot(leave, entering);
    }
  }

  // Fills the free columns from the defining rows, latest pivot first.
  void back_substitute(Vector& values, bool homogeneous) const {
    for (auto it = elimination_order_.rbegin(); it != elimination_order_.rend(); ++it) {
      const TableauRow& row = rows_[*it];
      Rational v = homogeneous ? Rational() : row.rhs;
      for (const auto& e : row.coeffs.entries())
        if (e.index != row.basic) v.sub_mul(e.value, values[e.index]);
      values[row.basic] = std::move(v);
    }
  }

  LPOptions options_;
  std::size_t dim_;
  std::size_t m1_;
  std::size_t m2_;
  std::size_t columns_;
  std::size_t first_artificial_ = kNoColumn;
  std::vector<TableauRow> rows_;
  std::vector<std::size_t> active_;
  std::vector<std::size_t> elimination_order_;
  std::vector<bool> unpivoted_;
  ObjectiveRow phase2_;
  std::optional<ObjectiveRow> phase1_;
  std::optional<Vector> farkas_;
  std::size_t pivots_ = 0;
};

}  // namespace detail

namespace {

Vector negate(const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

// A^T y + E^T z as a dense vector.
Vector combine_rows(const HPolyhedron& h, const Vector& y, const Vector& z) {
  Vector acc(h.dimension());
  for (std::size_t i = 0; i < h.inequalities().size(); ++i) {
    if (y[i].is_zero()) continue;
    for (const auto& e : h.inequalities()[i].coeffs.entries()) acc[e.index].add_mul(y[i], e.value);
  }
  for (std::size_t k = 0; k < h.equalities().size(); ++k) {
    if (z[k].is_zero()) continue;
    for (const auto& e : h.equalities()[k].coeffs.entries()) acc[e.index].add_mul(z[k], e.value);
  }
  return acc;
}

Rational combine_rhs(const HPolyhedron& h, const Vector& y, const Vector& z) {
  Rational s;
  for (std::size_t i = 0; i < h.inequalities().size(); ++i) s.add_mul(y[i], h.inequalities()[i].rhs);
  for (std::size_t k = 0; k < h.equalities().size(); ++k) s.add_mul(z[k], h.equalities()[k].rhs);
  return s;
}

LPOutcome finish(detail::Simplex& simplex, const Vector& objective, const HPolyhedron& constraints, Sense sense,
                 const LPOptions& options);

}  // namespace

bool is_farkas_certificate(const HPolyhedron& constraints, const Vector& y, const Vector& z) {
  if (y.size() != constraints.inequalities().size() || z.size() != constraints.equalities().size()) return false;
  for (const auto& v : y)
    if (v.sign() < 0) return false;
  if (!is_zero(combine_rows(constraints, y, z))) return false;
  return combine_rhs(constraints, y, z).sign() > 0;
}

std::string check_certificate(const Vector& objective, const HPolyhedron& constraints, Sense sense,
                              const LPOutcome& outcome) {
  const Vector c = sense == Sense::minimize ? objective : negate(objective);
  switch (outcome.status) {
    case LPStatus::optimal: {
      if (auto v = constraints.first_violation(outcome.witness)) return "witness violates " + *v;
      const Rational value = dot(c, outcome.witness);
      const Rational reported = sense == Sense::minimize ? outcome.value : -outcome.value;
      if (value != reported) return "witness objective differs from reported value";
      if (outcome.inequality_multipliers.size() != constraints.inequalities().size() ||
          outcome.equality_multipliers.size() != constraints.equalities().size())
        return "multiplier dimension mismatch";
      for (const auto& v : outcome.inequality_multipliers)
        if (v.sign() < 0) return "negative inequality multiplier";
      const Vector lhs = combine_rows(constraints, outcome.inequality_multipliers, outcome.equality_multipliers);
      if (lhs != c) return "dual multipliers do not reproduce the objective";
      if (combine_rhs(constraints, outcome.inequality_multipliers, outcome.equality_multipliers) != reported)
        return "dual value differs from primal value";
      return {};
    }
    case LPStatus::infeasible:
      if (!is_farkas_certificate(constraints, outcome.inequality_multipliers, outcome.equality_multipliers))
        return "invalid Farkas certificate";
      return {};
    case LPStatus::unbounded: {
      if (outcome.ray.size() != constraints.dimension()) return "ray dimension mismatch";
      for (const auto& r : constraints.inequalities())
        if (r.lhs(outcome.ray).sign() < 0) return "ray leaves " + describe(r, ">=");
      for (const auto& r : constraints.equalities())
        if (!r.lhs(outcome.ray).is_zero()) return "ray leaves " + describe(r, "=");
      if (dot(c, outcome.ray).sign() >= 0) return "ray does not improve the objective";
      return {};
    }
  }
  return "unknown status";
}

namespace {

LPOutcome finish(detail::Simplex& simplex, const Vector& objective, const HPolyhedron& constraints, Sense sense,
                 const LPOptions& options) {
  LPOutcome out = simplex.optimize(sense == Sense::minimize ? objective : negate(objective));
  if (sense == Sense::maximize && out.status == LPStatus::optimal) out.value = -out.value;
  if (options.self_check) {
    const std::string problem = check_certificate(objective, constraints, sense, out);
    if (!problem.empty()) throw std::logic_error("LP self-check failed: " + problem);
  }
  return out;
}

}  // namespace

LPOutcome solve_lp(const Vector& objective, const HPolyhedron& constraints, Sense sense, const LPOptions& options) {
  if (objective.size() != constraints.dimension())
    throw MalformedInput("LP objective dimension " + std::to_string(objective.size()) +
                         " != constraint dimension " + std::to_string(constraints.dimension()));
  detail::Simplex simplex(constraints, options);
  simplex.prepare();
  return finish(simplex, objective, constraints, sense, options);
}

PreparedLP::PreparedLP(HPolyhedron constraints, const LPOptions& options)
    : constraints_(std::make_shared<const HPolyhedron>(std::move(constraints))), options_(options) {
  auto simplex = std::make_shared<detail::Simplex>(*constraints_, options_);
  simplex->prepare();
  prepared_ = std::move(simplex);
}

LPOutcome PreparedLP::solve(const Vector& objective, Sense sense) const {
  if (objective.size() != constraints_->dimension())
    throw MalformedInput("LP objective dimension " + std::to_string(objective.size()) +
                         " != constraint dimension " + std::to_string(constraints_->dimension()));
  detail::Simplex simplex = *prepared_;
  return finish(simplex, objective, *constraints_, sense, options_);
}

LPOutcome solve_lp(const LPProblem& problem, const LPOptions& options) {
  return solve_lp(problem.objective, problem.constraints, problem.sense, options);
}

}  // namespace xfkit
