#pragma once

// Exact scalar and point arithmetic plus the primitive predicates the rest of
// the library is built on. Nothing in here touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

namespace lattice_pick {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of Z^2.
struct LatticePoint {
  Integer x;
  Integer y;

  LatticePoint() = default;
  LatticePoint(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  /// Lexicographic: x first, then y.
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
    if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// A point with rational coordinates. cpp_rational keeps fractions reduced
/// with a positive denominator, so member-wise equality is value equality.
struct RationalPoint {
  Rational x;
  Rational y;

  RationalPoint() = default;
  RationalPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  RationalPoint(const LatticePoint& p) : x(p.x), y(p.y) {}  // NOLINT(google-explicit-constructor)

  bool is_lattice() const;
  /// Precondition: is_lattice().
  LatticePoint to_lattice() const;

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);
std::ostream& operator<<(std::ostream& os, const RationalPoint& p);
std::string to_string(const LatticePoint& p);

/// Closed segment with distinct endpoints.
class Segment {
 public:
  /// Throws std::invalid_argument when start == end.
  Segment(RationalPoint start, RationalPoint end);

  const RationalPoint& start() const { return start_; }
  const RationalPoint& end() const { return end_; }

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.start_ == b.start_ && a.end_ == b.end_;
  }

 private:
  RationalPoint start_;
  RationalPoint end_;
};

enum class Orientation { Clockwise, CounterClockwise, Collinear };

const char* to_string(Orientation o);

/// Sign of (b - a) x (c - a).
Orientation orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c);
Orientation orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

/// (b - a) x (c - a) on lattice points.
Integer cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

struct NoIntersection {
  friend bool operator==(NoIntersection, NoIntersection) { return true; }
};

/// Empty, a single point, or a positive-length collinear overlap.
using SegmentIntersection = std::variant<NoIntersection, RationalPoint, Segment>;

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

enum class SegmentLocation { Endpoint, RelativeInterior, Off };

SegmentLocation point_on_segment(const RationalPoint& p, const Segment& s);
SegmentLocation point_on_segment(const LatticePoint& p, const LatticePoint& a,
                                 const LatticePoint& b);

/// gcd(|dx|, |dy|): the number of lattice steps from a to b.
Integer gcd_width(const LatticePoint& a, const LatticePoint& b);

// Lattice-only variants of the intersection predicates. They never build
// rationals and are what the hot loops use; tests pin them to
// segment_intersection.

/// True iff closed segments [a,b] and [c,d] share at least one point.
bool segments_meet(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                   const LatticePoint& d);

/// True iff closed segments [a,b] and [c,d] are collinear and share a
/// positive-length piece.
bool segments_overlap(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                      const LatticePoint& d);

/// Integer floor / ceiling of num/den for den > 0.
Integer floor_div(const Integer& num, const Integer& den);
Integer ceil_div(const Integer& num, const Integer& den);

}  // namespace lattice_pick
