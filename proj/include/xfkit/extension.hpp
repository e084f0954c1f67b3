#pragma once

#include <string>
#include <vector>

#include "xfkit/graph.hpp"
#include "xfkit/polyhedron.hpp"

namespace xfkit {

/// A named range [start, start + count) of lifted coordinates.
struct Block {
  std::string label;
  std::size_t start = 0;
  std::size_t count = 0;
};

/// Lifted system Q over R^{d+q} with a linear map pi; the formulation
/// represents pi(Q). Its size is the number of inequality rows of Q.
struct ExtendedFormulation {
  std::string kind;
  HPolyhedron lifted;
  LinearMap projection;
  std::vector<std::string> variables;      // one label per lifted coordinate
  std::vector<std::string> target_labels;  // one label per projected coordinate
  std::vector<Block> blocks;
  std::vector<std::string> notes;

  std::size_t size() const { return lifted.inequalities().size(); }
  std::size_t lifted_dimension() const { return lifted.dimension(); }
  std::size_t target_dimension() const { return projection.output_dimension(); }

  /// Throws MalformedInput if dimensions, labels or blocks are inconsistent.
  void validate() const;
};

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix = "x");

ExtendedFormulation trivial_extension(const HPolyhedron& p, std::vector<std::string> labels = {});

/// Extension of the radial cone of pi(Q) at v: coordinates (w, mu) with
/// A (w - w_v) >= mu (b - A w_v), E w = f, mu >= 0 where w_v is an LP
/// preimage of v. One row more than the input.
ExtendedFormulation radial_cone_extension(const ExtendedFormulation& ext, const Vector& v);

/// Appends <a,x> = beta (pulled back through pi) for each row, after
/// checking by LP that <a,x> >= beta is valid over pi(Q).
ExtendedFormulation face_extension(const ExtendedFormulation& ext, const std::vector<Row>& valid_rows);
inline ExtendedFormulation face_extension(const ExtendedFormulation& ext, const Row& valid_row) {
  return face_extension(ext, std::vector<Row>{valid_row});
}

/// Composes the projection with `map`.
ExtendedFormulation map_extension(const ExtendedFormulation& ext, const LinearMap& map,
                                  std::vector<std::string> labels = {});

struct BalasOptions {
  /// LP-check that every piece is nonempty (required for correctness)
  bool check_nonempty = true;
  /// try to certify that all pieces share one recession cone, which makes the
  /// union formulation exact rather than the closure of the hull
  bool certify_recession = true;
};

/// Disjunctive formulation of the closed convex hull of the union of the pieces.
/// Size is the sum of (piece size + 1).
ExtendedFormulation balas_union(const std::vector<ExtendedFormulation>& pieces, const BalasOptions& options = {});

/// Note attached by balas_union when the pieces provably share a recession cone.
inline constexpr const char* kExactUnionNote = "union semantics: exact (pieces share one recession cone)";
inline constexpr const char* kClosureUnionNote = "closure semantics, equality not certified";

/// {x : <y,x> >= gamma for all y in pi(Q)} via LP duality on the lifted
/// system of Q. Requires Q nonempty. One row more than the input.
ExtendedFormulation martin_dual_extension(const ExtendedFormulation& ext, const Rational& gamma);

/// S subset of T with |S| = |T|/2.
struct PieceSelector {
  std::vector<Node> S;
};

void validate_selector(const EdgeSpace& space, const PieceSelector& sel);
/// All selectors, lexicographic in S.
std::vector<PieceSelector> piece_selectors(const EdgeSpace& space);

/// Flow piece over (x, f): unit supply at S, unit demand at T \ S,
/// x_uv >= f_uv + f_vu, f >= 0. Size 3|E|.
ExtendedFormulation tjoin_flow_piece(const EdgeSpace& space, const PieceSelector& sel);
/// Same with one capacity row left out (mutation tests).
ExtendedFormulation tjoin_flow_piece_without_capacity(const EdgeSpace& space, const PieceSelector& sel,
                                                      std::size_t dropped_edge);

/// Union of all flow pieces; projects onto the T-join dominant.
ExtendedFormulation tjoin_dominant_extension(const EdgeSpace& space, const BalasOptions& options = {});
/// Dual transfer of the T-join extension plus explicit x >= 0; projects onto
/// the T-cut dominant.
ExtendedFormulation tcut_dominant_extension(const EdgeSpace& space);

/// G_m: face of the T'-cut dominant (T' = endpoints of m) with x_m = 1 and
/// x_e = 0 for the other edges of J.
ExtendedFormulation g_m_extension(const EdgeSpace& space, const std::vector<std::size_t>& join, std::size_t m);
/// Union of the G_m: the face {y in T-cut dominant : <chi(J), y> = 1}.
ExtendedFormulation ve_polar_face_extension(const EdgeSpace& space, const std::vector<std::size_t>& join);
/// Radial cone of the T-join dominant at chi(J) for a minimal T-join J.
ExtendedFormulation ve_radial_cone_extension(const EdgeSpace& space, const std::vector<std::size_t>& join);

/// Lexicographically smallest point of a polyhedron bounded below in every
/// coordinate, found by sequential LPs. For pointed p this is a vertex.
Vector lexicographic_min_point(const HPolyhedron& p);

/// Radial cone of the T-join dominant at an arbitrary point v of it.
ExtendedFormulation nonvertex_radial_cone_extension(const EdgeSpace& space, const Vector& v);

/// One factor of the product decomposition: a polyhedron over the listed
/// global edge coordinates (local coordinate i is edges[i]).
struct ProductBlock {
  std::string label;
  std::vector<std::size_t> edges;
  HPolyhedron local;
};

struct MainTheoremFace {
  std::vector<Node> u1, u2;
  Node t1 = 0, t2 = 0;
  std::vector<Node> v1, v2, t1_set, t2_set;
  std::vector<std::size_t> forbidden;  // F
  Vector v;                            // chi(U1 : U2)
  HPolyhedron p_face;                  // {x in T-join dominant : <v,x> = 1}
  HPolyhedron q;
  HPolyhedron q_tilde;
  std::vector<ProductBlock> blocks;
};

/// Face Q and its product form for the T-cut vertex chi(U1 : U2).
MainTheoremFace main_theorem_face(const EdgeSpace& space, const std::vector<Node>& u1);

/// Embeds block rows into R^{E_n}.
HPolyhedron product_of_blocks(std::size_t dimension, const std::vector<ProductBlock>& blocks);

}  // namespace xfkit
