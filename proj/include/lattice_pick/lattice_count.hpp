#pragma once

#include "lattice_pick/polygon.hpp"

#include <optional>

namespace lattice_pick {

/// Interior count I, boundary count B and twice the enclosed area.
struct PickCounts {
  Integer interior;
  Integer boundary;
  Integer area2;

  friend bool operator==(const PickCounts&, const PickCounts&) = default;
};

std::ostream& operator<<(std::ostream& os, const PickCounts& c);

/// Sum of gcd_width over the edges.
Integer boundary_count(const Polygon& poly);

/// Brute force: classify_point on every lattice point of the bounding box.
Integer interior_count(const Polygon& poly);

/// Column sweep over the bounding box. Same answer as interior_count, in
/// O(width * n) instead of O(width * height * n).
Integer interior_count_scanline(const Polygon& poly);

/// |shoelace sum|.
Integer area2(const Polygon& poly);

/// 2I + B - 2, twice the area Pick's formula predicts.
Integer pick_area2(const Integer& interior, const Integer& boundary);

enum class CountMethod { BruteForce, Scanline };

struct PickReport {
  PickCounts counts;
  Integer pick_area2;
  /// area2 - pick_area2; zero whenever the identity holds.
  Integer residual;
};

PickReport verify_pick(const Polygon& poly, CountMethod method = CountMethod::BruteForce);

PickCounts count_lattice(const Polygon& poly, CountMethod method = CountMethod::BruteForce);

/// Lexicographically smallest (x, then y) lattice point strictly inside a
/// triangle, if any.
std::optional<LatticePoint> first_interior_point(const Polygon& triangle);

/// Area as an exact fraction string: "17/2", "8".
std::string format_area(const Integer& area2);

}  // namespace lattice_pick
