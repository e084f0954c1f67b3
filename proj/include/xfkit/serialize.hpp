#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "xfkit/extension.hpp"
#include "xfkit/polyhedron.hpp"
#include "xfkit/verifier.hpp"

namespace xfkit {

using Json = nlohmann::json;

// Rationals are always "p/q" strings; rows are dense coefficient lists.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(std::span<const Rational> v);
Vector vector_from_json(const Json& j, std::size_t dimension);

Json to_json(const HPolyhedron& h, const std::vector<std::string>& variables = {});
HPolyhedron hpolyhedron_from_json(const Json& j);
Json to_json(const VPolyhedron& v);
VPolyhedron vpolyhedron_from_json(const Json& j);

/// Polyhedron schema plus "kind", "projection", "blocks", "notes" and "size".
Json to_json(const ExtendedFormulation& ext);
ExtendedFormulation formulation_from_json(const Json& j);

Json to_json(const MainTheoremFace& face, const EdgeSpace& space);

/// Claim, status, detail, witnesses and a summary of each certificate;
/// refutation certificates also carry their row and point.
Json to_json(const VerificationReport& report, bool with_timing = true);

/// One line: status, claim, detail.
std::string summary_line(const VerificationReport& report);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace xfkit
