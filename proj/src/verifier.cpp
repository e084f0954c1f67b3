#include "xfkit/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "xfkit/double_description.hpp"
#include "xfkit/errors.hpp"
#include "xfkit/parallel.hpp"
#include "xfkit/polyhedral_model.hpp"

namespace xfkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

HPolyhedron recession_of(const HPolyhedron& h) {
  HPolyhedron r(h.dimension());
  for (const auto& row : h.inequalities()) r.add_inequality(Row(row.coeffs, Rational(0)));
  for (const auto& row : h.equalities()) r.add_equality(Row(row.coeffs, Rational(0)));
  return r;
}

HPolyhedron with_image_fixed(const HPolyhedron& lifted, const LinearMap& projection, const Vector& target) {
  HPolyhedron s = lifted;
  for (std::size_t i = 0; i < projection.rows().size(); ++i) s.add_equality(Row(projection.rows()[i], target[i]));
  return s;
}

// Every row as one or two inequalities.
std::vector<Row> as_inequalities(const HPolyhedron& h) {
  std::vector<Row> out = h.inequalities();
  for (const auto& e : h.equalities()) {
    out.push_back(e);
    out.push_back(Row(SparseVector().plus_scaled(Rational(-1), e.coeffs), -e.rhs));
  }
  return out;
}

Vector pulled_back_objective(const LinearMap& projection, const Row& row) {
  return projection.transpose_apply(row.coeffs.to_dense(projection.output_dimension()))
      .to_dense(projection.input_dimension());
}

struct Lifted {
  std::shared_ptr<const HPolyhedron> system;
  std::shared_ptr<const LinearMap> projection;
};

Lifted share(const ExtendedFormulation& ext) {
  return {std::make_shared<const HPolyhedron>(ext.lifted), std::make_shared<const LinearMap>(ext.projection)};
}

Certificate check_row(const Lifted& q, const PreparedLP& lp, const Row& row) {
  Certificate c;
  c.system = q.system;
  c.projection = q.projection;
  c.row = row;
  c.objective = pulled_back_objective(*q.projection, row);
  c.outcome = lp.solve(c.objective);
  const std::string text = describe(row, ">=");
  switch (c.outcome.status) {
    case LPStatus::infeasible:
      c.kind = CertificateKind::row_valid;
      c.description = text + ": lifted system empty (Farkas)";
      break;
    case LPStatus::unbounded:
      c.kind = CertificateKind::row_violated_ray;
      c.point = c.outcome.ray;
      c.point_is_ray = true;
      c.description = text + " decreases without bound along image " + to_string(q.projection->apply(c.point));
      break;
    case LPStatus::optimal:
      if (c.outcome.value >= row.rhs) {
        c.kind = CertificateKind::row_valid;
        c.description = text + ": minimum " + c.outcome.value.str();
      } else {
        c.kind = CertificateKind::row_violated_point;
        c.point = c.outcome.witness;
        c.description = text + " violated at image " + to_string(q.projection->apply(c.point)) + " (value " +
                        c.outcome.value.str() + ")";
      }
      break;
  }
  return c;
}

Certificate check_generator(const Lifted& q, const Vector& generator, bool is_ray) {
  Certificate c;
  c.system = q.system;
  c.projection = q.projection;
  c.generator = generator;
  c.point_is_ray = is_ray;
  const HPolyhedron s = is_ray ? with_image_fixed(recession_of(*q.system), *q.projection, generator)
                               : with_image_fixed(*q.system, *q.projection, generator);
  c.outcome = solve_lp(Vector(s.dimension()), s);
  const std::string what = std::string(is_ray ? "ray " : "vertex ") + to_string(generator);
  if (c.outcome.status == LPStatus::infeasible) {
    c.kind = CertificateKind::generator_excluded;
    c.description = what + " has no lifted preimage (Farkas)";
  } else {
    c.kind = CertificateKind::generator_member;
    c.point = c.outcome.witness;
    c.description = what + " has a lifted preimage";
  }
  return c;
}

// Runs the checks in parallel; keeps results up to and including the first refutation.
std::vector<Certificate> run_checks(std::size_t count, const std::function<Certificate(std::size_t)>& check) {
  std::vector<Certificate> results(count);
  parallel_for(count, [&](std::size_t i) { results[i] = check(i); });
  for (std::size_t i = 0; i < count; ++i)
    if (is_refutation(results[i].kind)) {
      results.resize(i + 1);
      break;
    }
  return results;
}

void fold(VerificationReport& report, std::vector<Certificate> certs, const std::string& what) {
  std::size_t count = 0;
  for (auto& c : certs) {
    if (is_refutation(c.kind)) {
      report.status = ReportStatus::refuted;
      report.witnesses.push_back(c.description);
    } else {
      ++count;
    }
    report.certificates.push_back(std::move(c));
  }
  if (!report.detail.empty()) report.detail += "; ";
  report.detail += std::to_string(count) + " " + what;
}

VerificationReport rows_valid(const Lifted& q, const HPolyhedron& target, const std::string& claim) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = claim;
  const std::vector<Row> rows = as_inequalities(target);
  const PreparedLP lp(*q.system);
  fold(report, run_checks(rows.size(), [&](std::size_t i) { return check_row(q, lp, rows[i]); }), "rows valid");
  report.seconds = seconds_since(start);
  return report;
}

VerificationReport generators_in(const Lifted& q, const VPolyhedron& target, const std::string& claim) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = claim;
  const std::size_t nv = target.vertices().size();
  const std::size_t count = nv + target.rays().size();
  fold(report, run_checks(count, [&](std::size_t i) {
         return i < nv ? check_generator(q, target.vertices()[i], false)
                       : check_generator(q, target.rays()[i - nv], true);
       }),
       "generators covered");
  report.seconds = seconds_since(start);
  return report;
}

void require_same_dimension(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw MalformedInput(std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

// Exact check that every generator satisfies every row (caller precondition of projects_to).
std::optional<std::string> generator_outside(const VPolyhedron& v, const HPolyhedron& h) {
  for (const auto& x : v.vertices())
    if (auto bad = h.first_violation(x)) return "vertex " + to_string(x) + " violates " + *bad;
  const HPolyhedron rec = recession_of(h);
  for (const auto& r : v.rays())
    if (auto bad = rec.first_violation(r)) return "ray " + to_string(r) + " violates " + *bad;
  return std::nullopt;
}

VerificationReport skipped(const std::string& claim, const std::string& reason) {
  VerificationReport r;
  r.claim = claim;
  r.status = ReportStatus::skipped;
  r.detail = reason;
  return r;
}

// cone(v; generators): tau = 1, x = tau v + sum mu_k (x_k - v) + sum nu_j r_j.
ExtendedFormulation cone_extension(const VPolyhedron& gens, const Vector& v) {
  const std::size_t d = v.size();
  const std::size_t k = gens.vertices().size(), r = gens.rays().size();
  const std::size_t dim = 1 + k + r;
  ExtendedFormulation ext;
  ext.kind = "cone-over-generators";
  ext.lifted = HPolyhedron(dim);
  ext.lifted.add_equality(Row(SparseVector::unit(0), 1));
  for (std::size_t i = 1; i < dim; ++i) ext.lifted.add_inequality(Row(SparseVector::unit(i), 0));
  std::vector<Vector> rows(d, Vector(dim));
  for (std::size_t i = 0; i < d; ++i) {
    rows[i][0] = v[i];
    for (std::size_t j = 0; j < k; ++j) rows[i][1 + j] = gens.vertices()[j][i] - v[i];
    for (std::size_t j = 0; j < r; ++j) rows[i][1 + k + j] = gens.rays()[j][i];
  }
  ext.projection = LinearMap::from_dense(dim, rows);
  ext.variables.push_back("tau");
  for (std::size_t j = 0; j < k; ++j) ext.variables.push_back("mu" + std::to_string(j + 1));
  for (std::size_t j = 0; j < r; ++j) ext.variables.push_back("nu" + std::to_string(j + 1));
  ext.validate();
  return ext;
}

// { y : <x_k,y> >= 1 for vertices, <r_j,y> >= 0 for rays } plus optional extra equality.
HPolyhedron separation_system(const VPolyhedron& gens) {
  HPolyhedron h(gens.dimension());
  for (const auto& x : gens.vertices()) h.add_inequality(x, Rational(1));
  for (const auto& r : gens.rays()) h.add_inequality(r, Rational(0));
  return h;
}

VPolyhedron image(const VPolyhedron& p, const LinearMap& map) {
  VPolyhedron out(map.output_dimension());
  for (const auto& x : p.vertices()) out.add_vertex(map.apply(x));
  for (const auto& r : p.rays()) out.add_ray(map.apply(r));
  return out.canonical();
}

template <typename F>
VerificationReport timed(const std::string& claim, F&& body) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = claim;
  body(report);
  report.seconds = seconds_since(start);
  return report;
}

}  // namespace

std::string to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::verified:
      return "verified";
    case ReportStatus::refuted:
      return "refuted";
    case ReportStatus::skipped:
      return "skipped";
  }
  return "?";
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::row_valid:
      return "row-valid";
    case CertificateKind::generator_member:
      return "generator-member";
    case CertificateKind::row_valid_over_generators:
      return "row-valid-over-generators";
    case CertificateKind::row_violated_point:
      return "row-violated-point";
    case CertificateKind::row_violated_ray:
      return "row-violated-ray";
    case CertificateKind::generator_excluded:
      return "generator-excluded";
    case CertificateKind::generator_violates_row:
      return "generator-violates-row";
  }
  return "?";
}

bool is_refutation(CertificateKind kind) {
  return kind == CertificateKind::row_violated_point || kind == CertificateKind::row_violated_ray ||
         kind == CertificateKind::generator_excluded || kind == CertificateKind::generator_violates_row;
}

bool replay(const Certificate& c) {
  try {
    switch (c.kind) {
      case CertificateKind::row_valid: {
        if (!c.system || !c.projection) return false;
        if (c.objective != pulled_back_objective(*c.projection, c.row)) return false;
        if (c.outcome.status == LPStatus::infeasible)
          return is_farkas_certificate(*c.system, c.outcome.inequality_multipliers, c.outcome.equality_multipliers);
        if (c.outcome.status != LPStatus::optimal) return false;
        return c.outcome.value >= c.row.rhs &&
               check_certificate(c.objective, *c.system, Sense::minimize, c.outcome).empty();
      }
      case CertificateKind::row_violated_point: {
        if (!c.system || !c.projection || !c.system->contains(c.point)) return false;
        return c.row.lhs(c.projection->apply(c.point)) < c.row.rhs;
      }
      case CertificateKind::row_violated_ray: {
        if (!c.system || !c.projection || !recession_of(*c.system).contains(c.point)) return false;
        return c.row.lhs(c.projection->apply(c.point)).sign() < 0;
      }
      case CertificateKind::generator_member: {
        if (!c.system || !c.projection) return false;
        const bool inside = c.point_is_ray ? recession_of(*c.system).contains(c.point) : c.system->contains(c.point);
        return inside && c.projection->apply(c.point) == c.generator;
      }
      case CertificateKind::generator_excluded: {
        if (!c.system || !c.projection) return false;
        const HPolyhedron s = c.point_is_ray ? with_image_fixed(recession_of(*c.system), *c.projection, c.generator)
                                             : with_image_fixed(*c.system, *c.projection, c.generator);
        return is_farkas_certificate(s, c.outcome.inequality_multipliers, c.outcome.equality_multipliers);
      }
      case CertificateKind::row_valid_over_generators: {
        if (!c.generators) return false;
        for (const auto& x : c.generators->vertices())
          if (c.row.lhs(x) < c.row.rhs) return false;
        for (const auto& r : c.generators->rays())
          if (c.row.lhs(r).sign() < 0) return false;
        return true;
      }
      case CertificateKind::generator_violates_row: {
        const Rational lhs = c.row.lhs(c.point);
        return c.point_is_ray ? lhs.sign() < 0 : lhs < c.row.rhs;
      }
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

void VerificationReport::absorb(VerificationReport other, const std::string& prefix) {
  if (other.status == ReportStatus::refuted)
    status = ReportStatus::refuted;
  else if (other.status == ReportStatus::skipped && status == ReportStatus::verified)
    status = ReportStatus::skipped;
  for (auto& c : other.certificates) {
    if (!prefix.empty()) c.description = prefix + ": " + c.description;
    certificates.push_back(std::move(c));
  }
  for (auto& w : other.witnesses) witnesses.push_back(prefix.empty() ? std::move(w) : prefix + ": " + w);
  if (!other.detail.empty()) {
    if (!detail.empty()) detail += "; ";
    detail += prefix.empty() ? other.detail : prefix + ": " + other.detail;
  }
  seconds += other.seconds;
}

bool replay(const VerificationReport& report) {
  bool has_refutation = false;
  for (const auto& c : report.certificates) {
    if (!replay(c)) return false;
    has_refutation = has_refutation || is_refutation(c.kind);
  }
  if (report.status == ReportStatus::refuted) return has_refutation || !report.witnesses.empty();
  return !has_refutation;
}

VerificationReport verify_extension_projects_to(const ExtendedFormulation& ext, const HPolyhedron& target_h,
                                                const VPolyhedron& target_v, const std::string& claim) {
  ext.validate();
  require_same_dimension(ext.target_dimension(), target_h.dimension(), "target H-description");
  require_same_dimension(ext.target_dimension(), target_v.dimension(), "target V-description");
  if (auto bad = generator_outside(target_v, target_h))
    throw MalformedInput("target descriptions disagree: " + *bad);
  const Lifted q = share(ext);
  VerificationReport report = rows_valid(q, target_h, claim);
  report.detail = "subset: " + report.detail;
  if (report.status == ReportStatus::refuted) return report;
  VerificationReport sup = generators_in(q, target_v, claim);
  report.absorb(std::move(sup), "superset");
  return report;
}

VerificationReport verify_extension_contained_in(const ExtendedFormulation& ext, const HPolyhedron& target_h,
                                                 const std::string& claim) {
  ext.validate();
  require_same_dimension(ext.target_dimension(), target_h.dimension(), "target H-description");
  return rows_valid(share(ext), target_h, claim);
}

VerificationReport verify_generators_in(const ExtendedFormulation& ext, const VPolyhedron& target_v,
                                        const std::string& claim) {
  ext.validate();
  require_same_dimension(ext.target_dimension(), target_v.dimension(), "target V-description");
  return generators_in(share(ext), target_v, claim);
}

VerificationReport verify_h_equal(const HPolyhedron& a, const HPolyhedron& b, const std::string& claim) {
  require_same_dimension(a.dimension(), b.dimension(), claim.c_str());
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = claim;
  const Lifted qa{std::make_shared<const HPolyhedron>(a), std::make_shared<const LinearMap>(LinearMap::identity(a.dimension()))};
  const Lifted qb{std::make_shared<const HPolyhedron>(b), qa.projection};
  report.absorb(rows_valid(qa, b, claim), "right rows over left");
  if (report.status != ReportStatus::refuted) report.absorb(rows_valid(qb, a, claim), "left rows over right");
  report.seconds = seconds_since(start);
  return report;
}

VerificationReport verify_radial_cone_identity(const HPolyhedron& p, const Vector& v) {
  return timed("radial-cone-identity", [&](VerificationReport& report) {
    const HPolyhedron k = radial_cone_h(p, v);
    const VPolyhedron gens = h_to_v(p);
    // v + mu (x_k - v) for a few mu, and the cone directions, satisfy every active row.
    VPolyhedron samples(p.dimension());
    for (const auto& x : gens.vertices())
      for (int mu : {0, 1, 2, 7}) {
        Vector s = v;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += Rational(mu) * (x[i] - v[i]);
        samples.add_vertex(std::move(s));
      }
    for (const auto& r : gens.rays()) samples.add_ray(r);
    auto shared_samples = std::make_shared<const VPolyhedron>(samples.canonical());
    std::vector<Certificate> direct;
    for (const Row& row : as_inequalities(k)) {
      Certificate c;
      c.kind = CertificateKind::row_valid_over_generators;
      c.generators = shared_samples;
      c.row = row;
      c.description = describe(row, ">=") + " holds at every sample";
      for (const auto& x : shared_samples->vertices())
        if (row.lhs(x) < row.rhs) {
          c.kind = CertificateKind::generator_violates_row;
          c.point = x;
          c.description = "sample " + to_string(x) + " violates " + describe(row, ">=");
          break;
        }
      direct.push_back(std::move(c));
      if (is_refutation(direct.back().kind)) break;
    }
    fold(report, std::move(direct), "rows checked at samples");
    if (report.status == ReportStatus::refuted) return;
    report.absorb(verify_extension_projects_to(cone_extension(gens, v), k, h_to_v(k), "radial-cone-identity"),
                  "cone(P - v) + v");
  });
}

VerificationReport verify_structure_lemma(const VPolyhedron& p, const Vector& v) {
  return timed("structure-lemma", [&](VerificationReport& report) {
    require_blocking(p);
    const HPolyhedron p_h = v_to_h(p);
    require_member(p_h, v, "structure lemma");
    const HPolyhedron k_h = radial_cone_h(p_h, v);
    const VPolyhedron k_v = h_to_v(k_h);
    const HPolyhedron f_h = polar_face(blocker(p), v);
    const VPolyhedron f_v = h_to_v(f_h);
    if (f_v.empty()) {
      report.status = ReportStatus::skipped;
      report.detail = "polar face at " + to_string(v) + " is empty";
      return;
    }
    HPolyhedron rhs_i = separation_system(k_v);
    rhs_i.add_equality(v, Rational(1));
    report.absorb(verify_h_equal(f_h, rhs_i, "part (i)"), "part (i)");
    if (report.status == ReportStatus::refuted) return;
    report.absorb(verify_h_equal(k_h, separation_system(f_v), "part (ii)"), "part (ii)");
  });
}

VerificationReport verify_dual_transfer(const VPolyhedron& p, const Vector& v) {
  return timed("dual-transfer", [&](VerificationReport& report) {
    require_blocking(p);
    const HPolyhedron p_h = v_to_h(p);
    require_member(p_h, v, "dual transfer");
    const HPolyhedron k_h = radial_cone_h(p_h, v);
    const HPolyhedron f_h = polar_face(blocker(p), v);

    const ExtendedFormulation polar = trivial_extension(f_h);
    const ExtendedFormulation to_cone = martin_dual_extension(polar, Rational(1));
    report.absorb(verify_size(to_cone, polar.size() + 1, "polar face -> radial cone size"), "size");
    report.absorb(verify_extension_projects_to(to_cone, k_h, h_to_v(k_h), "polar face -> radial cone"),
                  "polar face -> radial cone");
    if (report.status == ReportStatus::refuted) return;

    const ExtendedFormulation cone = trivial_extension(k_h);
    ExtendedFormulation to_face = martin_dual_extension(cone, Rational(1));
    report.absorb(verify_size(to_face, cone.size() + 1, "radial cone -> polar face size"), "size");
    to_face = face_extension(to_face, Row(SparseVector::from_dense(v), Rational(1)));
    report.absorb(verify_size(to_face, cone.size() + 1, "face restriction keeps size"), "size");
    report.absorb(verify_extension_projects_to(to_face, f_h, h_to_v(f_h), "radial cone -> polar face"),
                  "radial cone -> polar face");
  });
}

VerificationReport verify_blocker_involution(const VPolyhedron& p) {
  std::string reason;
  if (!is_blocking(p, &reason)) return skipped("blocker-involution", "input is not blocking: " + reason);
  return timed("blocker-involution", [&](VerificationReport& report) {
    const HPolyhedron b = blocker(p);
    const HPolyhedron bb = blocker(h_to_v(b));
    report.absorb(verify_h_equal(bb, v_to_h(p), "B(B(P)) = P"));
  });
}

VerificationReport verify_blocking_duality(const EdgeSpace& space) {
  return timed("blocking-duality", [&](VerificationReport& report) {
    const HPolyhedron b = blocker(h_to_v(tjoin_dominant_h(space)));
    report.absorb(verify_h_equal(b, tcut_dominant_h(space), "blocker of T-join dominant = T-cut dominant"));
  });
}

VerificationReport verify_projection_commutes(const HPolyhedron& p, const Vector& v, const LinearMap& map) {
  require_same_dimension(map.input_dimension(), p.dimension(), "projection input");
  return timed("projection-commutes", [&](VerificationReport& report) {
    const HPolyhedron left = v_to_h(image(h_to_v(radial_cone_h(p, v)), map));
    const HPolyhedron image_p = v_to_h(image(h_to_v(p), map));
    const HPolyhedron right = radial_cone_h(image_p, map.apply(v));
    report.absorb(verify_h_equal(left, right, "pi(K_P(v)) = K_pi(P)(pi(v))"));
  });
}

VerificationReport verify_face_radial_cone(const HPolyhedron& p, const std::vector<Row>& face_rows, const Vector& v) {
  return timed("face-radial-cone", [&](VerificationReport& report) {
    const HPolyhedron face = face_restrict(p, face_rows);
    require_member(face, v, "face radial cone");
    const HPolyhedron restricted = with_rows(radial_cone_h(p, v), {}, face_rows);
    const ExtendedFormulation cone = cone_extension(h_to_v(face), v);
    report.absorb(verify_extension_projects_to(cone, restricted, h_to_v(restricted), "K_F(v) = K_P(v) on the face"));
  });
}

VerificationReport verify_fm_equals_gm(const EdgeSpace& space, const std::vector<std::size_t>& join, std::size_t m) {
  if (!is_minimal_tjoin(space, join))
    throw DomainError(format_edges(space, join) + " is not a minimal T-join");
  if (std::find(join.begin(), join.end(), m) == join.end())
    throw DomainError("edge " + space.edge_label(m) + " is not in " + format_edges(space, join));
  return timed("fm-equals-gm", [&](VerificationReport& report) {
    HPolyhedron fm = tcut_dominant_h(space);
    fm.add_equality(characteristic_vector(space, join), Rational(1));
    for (std::size_t e : join)
      if (e != m) fm.add_equality(Row(SparseVector::unit(e), 0));
    const Edge ends = space.edge(m);
    HPolyhedron gm = tcut_dominant_h(EdgeSpace(space.n(), {ends.first, ends.second}));
    gm.add_equality(Row(SparseVector::unit(m), 1));
    for (std::size_t e : join)
      if (e != m) gm.add_equality(Row(SparseVector::unit(e), 0));
    report.absorb(verify_h_equal(fm, gm, "F_m = G_m"));
  });
}

VerificationReport verify_q_equals_qtilde(const EdgeSpace& space, const std::vector<Node>& u1) {
  const MainTheoremFace f = main_theorem_face(space, u1);
  return timed("q-equals-qtilde", [&](VerificationReport& report) {
    const std::size_t m = space.edge_count();
    report.absorb(verify_h_equal(f.q, f.q_tilde, "Q = Q~"), "Q = Q~");
    if (report.status == ReportStatus::refuted) return;

    // Q is the face of the T-join face cut out by x_e = 0 (e in F) and x_{t1t2} <= 1.
    const std::size_t t1t2 = space.index(f.t1, f.t2);
    HPolyhedron upper(m);
    upper.add_inequality(Row(SparseVector::unit(t1t2, Rational(-1)), Rational(-1)));
    report.absorb(rows_valid({std::make_shared<const HPolyhedron>(f.p_face),
                              std::make_shared<const LinearMap>(LinearMap::identity(m))},
                             upper, "x_t1t2 <= 1 valid on the face"),
                  "face");
    HPolyhedron face = f.p_face;
    face.add_equality(Row(SparseVector::unit(t1t2), 1));
    for (std::size_t e : f.forbidden) face.add_equality(Row(SparseVector::unit(e), 0));
    report.absorb(verify_h_equal(f.q, face, "Q is a face"), "face");
    if (report.status == ReportStatus::refuted) return;

    // Blocks partition the edges and every row of Q~ lives inside one block.
    std::vector<int> owner(m, -1);
    for (std::size_t b = 0; b < f.blocks.size(); ++b)
      for (std::size_t e : f.blocks[b].edges) {
        if (e >= m || owner[e] != -1) {
          report.status = ReportStatus::refuted;
          report.witnesses.push_back("edge index " + std::to_string(e) + " in two blocks or out of range");
          return;
        }
        owner[e] = static_cast<int>(b);
      }
    for (std::size_t e = 0; e < m; ++e)
      if (owner[e] == -1) {
        report.status = ReportStatus::refuted;
        report.witnesses.push_back("edge " + space.edge_label(e) + " in no block");
        return;
      }
    auto row_block = [&](const Row& r) {
      std::set<int> blocks;
      for (const auto& entry : r.coeffs.entries()) blocks.insert(owner[entry.index]);
      return blocks.size();
    };
    for (const auto* rows : {&f.q_tilde.inequalities(), &f.q_tilde.equalities()})
      for (const auto& r : *rows)
        if (row_block(r) > 1) {
          report.status = ReportStatus::refuted;
          report.witnesses.push_back("row " + describe(r, ">=") + " spans several blocks");
          return;
        }
    report.absorb(verify_h_equal(product_of_blocks(m, f.blocks), f.q_tilde, "product of blocks = Q~"), "product");
    if (report.verified()) {
      if (!report.detail.empty()) report.detail += "; ";
      report.detail += std::to_string(f.blocks.size()) + " blocks partition " + std::to_string(m) + " edges";
    }
  });
}

VerificationReport verify_union_covers(const EdgeSpace& space, const std::vector<ExtendedFormulation>& pieces) {
  return timed("union-covers", [&](VerificationReport& report) {
    std::vector<Lifted> lifted;
    for (const auto& p : pieces) {
      p.validate();
      require_same_dimension(p.target_dimension(), space.edge_count(), "piece");
      lifted.push_back(share(p));
    }
    std::size_t covered = 0;
    for (const auto& join : enumerate_minimal_tjoins(space)) {
      const Vector chi = characteristic_vector(space, join);
      std::vector<Certificate> exclusions;
      bool found = false;
      for (const auto& q : lifted) {
        Certificate c = check_generator(q, chi, false);
        if (!is_refutation(c.kind)) {
          c.description = "join " + format_edges(space, join.edges) + " lies in a piece";
          report.certificates.push_back(std::move(c));
          found = true;
          break;
        }
        exclusions.push_back(std::move(c));
      }
      if (!found) {
        report.status = ReportStatus::refuted;
        report.witnesses.push_back("join " + format_edges(space, join.edges) + " is in no piece");
        for (auto& c : exclusions) report.certificates.push_back(std::move(c));
        report.detail = "uncovered join " + format_edges(space, join.edges);
        return;
      }
      ++covered;
    }
    report.detail = std::to_string(covered) + " joins covered by " + std::to_string(pieces.size()) + " pieces";
    const HPolyhedron dom = tjoin_dominant_h(space);
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      report.absorb(rows_valid(lifted[i], dom, "piece contained in dominant"), "piece " + std::to_string(i + 1));
      if (report.status == ReportStatus::refuted) return;
    }
  });
}

VerificationReport verify_integrality(const ExtendedFormulation& ext) {
  ext.validate();
  if (ext.lifted_dimension() > dimension_cap())
    return skipped("integrality", "lifted dimension " + std::to_string(ext.lifted_dimension()) +
                                      " exceeds the double-description cap " + std::to_string(dimension_cap()));
  return timed("integrality", [&](VerificationReport& report) {
    const VPolyhedron v = h_to_v(ext.lifted);
    std::size_t count = 0;
    for (const auto& x : v.vertices()) {
      const Vector y = ext.projection.apply(x);
      for (const auto& c : y)
        if (!c.is_integer()) {
          report.status = ReportStatus::refuted;
          report.witnesses.push_back("lifted vertex " + to_string(x) + " projects to fractional " + to_string(y));
          return;
        }
      ++count;
    }
    report.detail = std::to_string(count) + " vertex images integral";
  });
}

VerificationReport verify_size(const ExtendedFormulation& ext, std::size_t expected, const std::string& claim) {
  VerificationReport report;
  report.claim = claim;
  const std::string text = "size " + std::to_string(ext.size()) + ", expected " + std::to_string(expected);
  report.detail = text;
  if (ext.size() != expected) {
    report.status = ReportStatus::refuted;
    report.witnesses.push_back(text);
  }
  return report;
}

}  // namespace xfkit
