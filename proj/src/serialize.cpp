#include "xfkit/serialize.hpp"

#include <fstream>
#include <sstream>

#include "xfkit/errors.hpp"

namespace xfkit {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw MalformedInput(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t size_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_number_unsigned() && !(f.is_number_integer() && f.get<long long>() >= 0))
    throw MalformedInput(std::string("field '") + name + "' must be a nonnegative integer");
  return f.get<std::size_t>();
}

std::vector<std::string> strings(const Json& j) {
  if (!j.is_array()) throw MalformedInput("expected an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw MalformedInput("expected an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Json row_json(const Row& r, std::size_t dim) {
  return {{"coeffs", to_json(r.coeffs.to_dense(dim))}, {"rhs", to_json(r.rhs)}};
}

Row row_from_json(const Json& j, std::size_t dim) {
  return Row(SparseVector::from_dense(vector_from_json(field(j, "coeffs"), dim)), rational_from_json(field(j, "rhs")));
}

Json certificate_json(const Certificate& c) {
  Json j{{"kind", to_string(c.kind)}, {"description", c.description}};
  if (is_refutation(c.kind)) {
    if (!c.row.coeffs.empty() || !c.row.rhs.is_zero()) {
      const std::size_t dim = std::max(c.row.coeffs.extent(), c.projection ? c.projection->output_dimension() : 0);
      j["row"] = row_json(c.row, dim);
    }
    if (!c.point.empty()) {
      j["point"] = to_json(c.point);
      j["point_is_ray"] = c.point_is_ray;
      if (c.projection && c.point.size() == c.projection->input_dimension())
        j["image"] = to_json(c.projection->apply(c.point));
    }
    if (!c.generator.empty()) j["generator"] = to_json(c.generator);
  }
  return j;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw MalformedInput(std::string("bad rational: ") + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw MalformedInput("rationals must be \"p/q\" strings, got " + j.dump());
}

Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const Json& j, std::size_t dimension) {
  if (!j.is_array()) throw MalformedInput("expected an array of rationals");
  if (j.size() != dimension)
    throw MalformedInput("vector has " + std::to_string(j.size()) + " entries, expected " + std::to_string(dimension));
  Vector out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json to_json(const HPolyhedron& h, const std::vector<std::string>& variables) {
  const std::size_t d = h.dimension();
  Json j{{"dimension", d}};
  j["variables"] = variables.empty() ? default_labels(d) : variables;
  Json ineq = Json::array(), eq = Json::array();
  for (const auto& r : h.inequalities()) ineq.push_back(row_json(r, d));
  for (const auto& r : h.equalities()) eq.push_back(row_json(r, d));
  j["inequalities"] = std::move(ineq);
  j["equalities"] = std::move(eq);
  return j;
}

HPolyhedron hpolyhedron_from_json(const Json& j) {
  const std::size_t d = size_field(j, "dimension");
  HPolyhedron h(d);
  if (j.contains("inequalities"))
    for (const auto& r : field(j, "inequalities")) h.add_inequality(row_from_json(r, d));
  if (j.contains("equalities"))
    for (const auto& r : field(j, "equalities")) h.add_equality(row_from_json(r, d));
  return h;
}

Json to_json(const VPolyhedron& v) {
  Json verts = Json::array(), rays = Json::array();
  for (const auto& x : v.vertices()) verts.push_back(to_json(x));
  for (const auto& r : v.rays()) rays.push_back(to_json(r));
  return {{"dimension", v.dimension()}, {"vertices", std::move(verts)}, {"rays", std::move(rays)}};
}

VPolyhedron vpolyhedron_from_json(const Json& j) {
  const std::size_t d = size_field(j, "dimension");
  VPolyhedron v(d);
  for (const auto& x : field(j, "vertices")) v.add_vertex(vector_from_json(x, d));
  if (j.contains("rays"))
    for (const auto& r : field(j, "rays")) v.add_ray(vector_from_json(r, d));
  return v;
}

Json to_json(const ExtendedFormulation& ext) {
  Json j = to_json(ext.lifted, ext.variables);
  j["kind"] = ext.kind;
  j["size"] = ext.size();
  Json rows = Json::array();
  for (const auto& r : ext.projection.rows()) rows.push_back(to_json(r.to_dense(ext.projection.input_dimension())));
  j["projection"] = {{"rows", std::move(rows)},
                     {"labels", ext.target_labels.empty() ? default_labels(ext.target_dimension()) : ext.target_labels}};
  Json blocks = Json::array();
  for (const auto& b : ext.blocks) blocks.push_back({{"label", b.label}, {"start", b.start}, {"count", b.count}});
  j["blocks"] = std::move(blocks);
  j["notes"] = ext.notes;
  return j;
}

ExtendedFormulation formulation_from_json(const Json& j) {
  ExtendedFormulation ext;
  ext.lifted = hpolyhedron_from_json(j);
  const std::size_t dim = ext.lifted.dimension();
  ext.kind = j.contains("kind") ? field(j, "kind").get<std::string>() : "loaded";
  if (j.contains("variables")) ext.variables = strings(field(j, "variables"));
  const Json& proj = field(j, "projection");
  std::vector<SparseVector> rows;
  for (const auto& r : field(proj, "rows")) rows.push_back(SparseVector::from_dense(vector_from_json(r, dim)));
  ext.projection = LinearMap(dim, std::move(rows));
  if (proj.contains("labels")) ext.target_labels = strings(field(proj, "labels"));
  if (j.contains("blocks"))
    for (const auto& b : field(j, "blocks"))
      ext.blocks.push_back({field(b, "label").get<std::string>(), size_field(b, "start"), size_field(b, "count")});
  if (j.contains("notes")) ext.notes = strings(field(j, "notes"));
  if (j.contains("size") && size_field(j, "size") != ext.size())
    throw MalformedInput("recorded size " + std::to_string(size_field(j, "size")) + " differs from the row count " +
                         std::to_string(ext.size()));
  ext.validate();
  return ext;
}

Json to_json(const MainTheoremFace& face, const EdgeSpace& space) {
  const auto labels = space.edge_labels();
  Json blocks = Json::array();
  for (const auto& b : face.blocks) {
    std::vector<std::string> local;
    for (auto e : b.edges) local.push_back(labels[e]);
    blocks.push_back({{"label", b.label}, {"edges", format_edges(space, b.edges)}, {"polyhedron", to_json(b.local, local)}});
  }
  return {{"kind", "main-theorem-face"},
          {"u1", format_nodes(face.u1)},
          {"u2", format_nodes(face.u2)},
          {"t1", face.t1},
          {"t2", face.t2},
          {"forbidden", format_edges(space, face.forbidden)},
          {"v", to_json(face.v)},
          {"q", to_json(face.q, labels)},
          {"q_tilde", to_json(face.q_tilde, labels)},
          {"blocks", std::move(blocks)}};
}

Json to_json(const VerificationReport& report, bool with_timing) {
  Json certs = Json::array();
  for (const auto& c : report.certificates) certs.push_back(certificate_json(c));
  Json j{{"claim", report.claim},
         {"status", to_string(report.status)},
         {"detail", report.detail},
         {"witnesses", report.witnesses},
         {"certificates", std::move(certs)}};
  if (with_timing) j["seconds"] = report.seconds;
  return j;
}

std::string summary_line(const VerificationReport& report) {
  std::ostringstream out;
  out << to_string(report.status) << "  " << report.claim;
  if (!report.detail.empty()) out << "  (" << report.detail << ")";
  if (report.status == ReportStatus::refuted && !report.witnesses.empty())
    out << "\n    witness: " << report.witnesses.front();
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace xfkit
