#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "xfkit/polyhedron.hpp"

namespace xfkit {

/// Ambient-dimension cap for double description: XFKIT_DIM_CAP if set, else 30.
std::size_t dimension_cap();

struct DDOptions {
  /// overrides dimension_cap() when set
  std::optional<std::size_t> cap;
};

/// Generators of { z : <g_i,z> >= 0, <e_k,z> = 0 }: extreme rays of the
/// pointed part plus a basis of the lineality space. Rays are primitive integer.
struct ConeGenerators {
  std::vector<Vector> rays;
  std::vector<Vector> lineality;
};

ConeGenerators cone_generators(const std::vector<Vector>& inequalities, const std::vector<Vector>& equalities,
                               std::size_t dimension);

/// Vertex/ray enumeration. Lines are reported as pairs of opposite rays and
/// the output is canonical. Throws DimensionCapExceeded above the cap.
VPolyhedron h_to_v(const HPolyhedron& p, const DDOptions& options = {});

/// Facet enumeration; lines of the dual cone become equality rows.
/// An empty input yields the infeasible system { 0 >= 1 }.
HPolyhedron v_to_h(const VPolyhedron& p, const DDOptions& options = {});

}  // namespace xfkit
