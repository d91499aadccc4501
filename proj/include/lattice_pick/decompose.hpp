#pragma once

// Constructive decomposition of a lattice polygon into elementary triangles.
//
// Triangles are refined until I = 0 and B = 3 (three-way split through an
// interior lattice point, otherwise two-way split through a boundary lattice
// point). Convex polygons with four or more vertices are cut along a chord
// between two vertices. Non-convex polygons are completed along a pocket:
// the maximal run of hull-interior vertices is replaced by the segment joining
// its two hull-frontier neighbours, giving a "filled" polygon that is the union
// of the input and the pocket.

#include "lattice_pick/lattice_count.hpp"
#include "lattice_pick/polygon.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lattice_pick {

class DecomposeError : public std::runtime_error {
 public:
  enum class Kind {
    NotATriangle,
    NotElementary,
    AlreadyElementary,
    EndpointsNotVertices,
    NoGoodLinepath,
    PolygonConvex,
    InternalInvariantViolation,
    NegativeCount,
  };

  DecomposeError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Affine map x -> M x + t sending (0,0), (1,0), (0,1) to a triangle's
/// vertices in order. Columns of M are v1 - v0 and v2 - v0.
struct UnimodularWitness {
  Integer m11, m12;
  Integer m21, m22;
  LatticePoint translation;

  Integer determinant() const { return Integer(m11 * m22 - m12 * m21); }
  LatticePoint apply(const LatticePoint& p) const;

  friend bool operator==(const UnimodularWitness&, const UnimodularWitness&) = default;
};

/// Polygonal chain between two boundary points of a polygon.
struct SplitPath {
  VertexList vertices;

  friend bool operator==(const SplitPath&, const SplitPath&) = default;
};

struct PocketDecomposition {
  /// Left rotation applied to the parent so the pocket path starts at index 0.
  std::size_t rotation = 0;
  /// [a, x1, ..., xm, b].
  VertexList pocket_path;
  Polygon pocket;
  Polygon filled;
};

enum class NodeKind { Leaf, Split, Pocket };

const char* to_string(NodeKind kind);

/// Value-semantic decomposition certificate tree. `polygon` is the vertex list
/// of the polygon this node stands for. Only the fields relevant to `kind` are
/// meaningful:
///   Leaf:   witness
///   Split:  path; children = {left, right} sides of the path
///   Pocket: path (the pocket path), rotation; children = {filled, pocket}
struct DecompositionTree {
  NodeKind kind = NodeKind::Leaf;
  VertexList polygon;
  UnimodularWitness witness;
  VertexList path;
  std::size_t rotation = 0;
  std::vector<DecompositionTree> children;

  friend bool operator==(const DecompositionTree&, const DecompositionTree&) = default;
};

std::size_t leaf_count(const DecompositionTree& tree);
std::size_t tree_depth(const DecompositionTree& tree);
bool contains_pocket(const DecompositionTree& tree);

// --- base case ---------------------------------------------------------------

/// I = 0 and B = 3. Throws NotATriangle.
bool is_elementary(const Polygon& tri);

/// Throws NotATriangle / NotElementary.
UnimodularWitness unimodular_witness(const Polygon& tri);

struct TriangleSplit {
  enum class Kind { ThreeWay, TwoWay };
  Kind kind;
  /// Interior lattice point (ThreeWay) or boundary lattice point (TwoWay).
  LatticePoint point;
  std::vector<Polygon> triangles;
};

/// Throws NotATriangle / AlreadyElementary.
TriangleSplit split_triangle(const Polygon& tri);

// --- splitting along paths ---------------------------------------------------

/// True iff `path` is a simple chain whose relative interior lies strictly
/// inside `poly`. Throws EndpointsNotVertices.
bool is_good_path(const Polygon& poly, const VertexList& path);

/// If `p` lies in the relative interior of an edge, returns the vertex list
/// with `p` inserted there; if it is already a vertex, returns the list
/// unchanged; otherwise nullopt.
std::optional<VertexList> with_boundary_vertex(const VertexList& vts, const LatticePoint& p);

/// Vertex lists of the two sides of a path whose endpoints are vertices of
/// `vts`: left walks the parent from path.front() to path.back() and returns
/// along the reversed path; right walks from path.back() to path.front() and
/// returns along the path. Throws EndpointsNotVertices.
std::pair<VertexList, VertexList> split_sides(const VertexList& vts, const VertexList& path);

/// Lattice points on a simple chain, not counting its two endpoints.
Integer path_interior_lattice_count(const VertexList& path);

enum class ChordRule { NonExtremeVertex, ExtremeTriangle, ExhaustiveScan };

const char* to_string(ChordRule rule);

struct ConvexChord {
  SplitPath path;
  /// Which construction produced the chord. ExhaustiveScan marks the
  /// fallback used when the construction's candidates all lie on the
  /// boundary (collinear vertices).
  ChordRule rule;
};

/// Precondition: is_convex(poly) and at least 4 vertices. Throws NoGoodLinepath.
ConvexChord find_good_linepath_convex(const Polygon& poly);

/// Throws PolygonConvex / InternalInvariantViolation.
PocketDecomposition find_pocket(const Polygon& poly);

/// Every maximal cyclic run of hull-interior vertices, as (index of a, m).
std::vector<std::pair<std::size_t, std::size_t>> pocket_runs(const Polygon& poly);

/// Filled and pocket vertex lists for the pocket whose path starts at
/// `rotation` and has `m` interior vertices.
std::pair<VertexList, VertexList> pocket_sides(const VertexList& vts, std::size_t rotation,
                                               std::size_t m);

/// True iff segment a-b meets the closed chain `vts` only at a and b.
bool meets_only_at_endpoints(const VertexList& vts, const LatticePoint& a, const LatticePoint& b);

// --- recombination -----------------------------------------------------------

enum class UnionKind { Split, PocketSplit };

/// Counts of the parent from the counts of its two pieces. `path_interior`
/// is the number of lattice points on the splitting path minus its two
/// endpoints.
///   Split        (p = q1 u q2):        I = I1 + I2 + S,  B = B1 + B2 - 2S - 2
///   PocketSplit  (p = filled - pocket): I = I1 - I2 - S,  B = B1 - B2 + 2S + 2
/// Throws NegativeCount if a count comes out negative.
PickCounts pick_union_counts(UnionKind kind, const PickCounts& c1, const PickCounts& c2,
                             const Integer& path_interior);

// --- driver ------------------------------------------------------------------

struct DecomposeStats {
  std::size_t convex_fallbacks = 0;
};

DecompositionTree decompose(const Polygon& poly, DecomposeStats* stats = nullptr);

}  // namespace lattice_pick
