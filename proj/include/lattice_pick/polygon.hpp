#pragma once

#include "lattice_pick/exact.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lattice_pick {

/// Open vertex list: closure back to the first vertex is implicit.
using VertexList = std::vector<LatticePoint>;

/// Edge i runs from vertex i to vertex (i + 1) mod n.
using EdgePair = std::pair<std::size_t, std::size_t>;

class PolygonError : public std::runtime_error {
 public:
  enum class Kind { TooFewVertices, DegenerateEdge, NotSimple };

  PolygonError(Kind kind, std::string message, std::optional<EdgePair> edges = std::nullopt)
      : std::runtime_error(std::move(message)), kind_(kind), edges_(edges) {}

  Kind kind() const { return kind_; }
  /// The offending edge pair for NotSimple, the degenerate edge twice for
  /// DegenerateEdge.
  const std::optional<EdgePair>& edges() const { return edges_; }

 private:
  Kind kind_;
  std::optional<EdgePair> edges_;
};

class HullError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simple closed lattice polygon. Only validate_polygon() builds one.
class Polygon {
 public:
  const VertexList& vertices() const { return vts_; }
  std::size_t size() const { return vts_.size(); }
  const LatticePoint& operator[](std::size_t i) const { return vts_[i]; }
  const LatticePoint& vertex(std::size_t i) const { return vts_[i % vts_.size()]; }
  /// Orientation of the vertex list as given; never normalized.
  Orientation orientation() const { return orientation_; }

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.vts_ == b.vts_; }

 private:
  friend Polygon validate_polygon(VertexList vts);
  Polygon(VertexList vts, Orientation o) : vts_(std::move(vts)), orientation_(o) {}

  VertexList vts_;
  Orientation orientation_;
};

/// First offending edge pair (lexicographic), or nullopt if the closed chain
/// is simple. Consecutive collinear edges that keep going forward are fine;
/// an edge that doubles back over its predecessor is not.
std::optional<EdgePair> find_self_intersection(std::span<const LatticePoint> vts);

/// False also for lists that break the VertexList invariants.
bool is_simple(std::span<const LatticePoint> vts);

/// Throws PolygonError.
Polygon validate_polygon(VertexList vts);

/// Cyclic left rotation by k mod n.
VertexList rotate_vertices(std::span<const LatticePoint> vts, std::size_t k);

/// Twice the signed area (positive for counterclockwise lists).
Integer signed_area2(std::span<const LatticePoint> vts);

enum class PointLocation { Inside, OnBoundary, Outside };

const char* to_string(PointLocation loc);

/// Exact Jordan classification. Boundary points are found edge by edge;
/// the rest are decided by the crossing parity of a ray with direction
/// (1, 1/k), k running over the primes until the ray misses every vertex.
PointLocation classify_point(const RationalPoint& p, const Polygon& poly);
PointLocation classify_point(const LatticePoint& p, const Polygon& poly);

/// Corners of the convex hull in counterclockwise order, starting from the
/// lexicographically smallest. Points lying on a hull edge are dropped.
/// Throws HullError when the points do not span a 2D region.
VertexList convex_hull(std::span<const LatticePoint> pts);

/// The hull corners as a (convex, counterclockwise) polygon.
Polygon hull_polygon(const Polygon& poly);

std::size_t extreme_point_count(const Polygon& poly);

/// True iff no vertex lies strictly inside the convex hull.
bool is_convex(const Polygon& poly);

}  // namespace lattice_pick
