#include "lattice_pick/exact.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lattice_pick {

namespace {

int sign(const Integer& v) { return v.sign(); }
int sign(const Rational& v) { return v.sign(); }

Orientation from_sign(int s) {
  if (s > 0) return Orientation::CounterClockwise;
  if (s < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

Rational cross_r(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Rational dot_r(const RationalPoint& o, const RationalPoint& p, const RationalPoint& q) {
  return (p.x - o.x) * (q.x - o.x) + (p.y - o.y) * (q.y - o.y);
}

// Position of a point along a segment's dominant axis; used to order
// collinear points.
const Rational& axis_coord(const RationalPoint& p, bool use_x) { return use_x ? p.x : p.y; }

}  // namespace

bool RationalPoint::is_lattice() const {
  return denominator(x) == 1 && denominator(y) == 1;
}

LatticePoint RationalPoint::to_lattice() const {
  return {numerator(x), numerator(y)};
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

std::ostream& operator<<(std::ostream& os, const RationalPoint& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

std::string to_string(const LatticePoint& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Segment::Segment(RationalPoint start, RationalPoint end)
    : start_(std::move(start)), end_(std::move(end)) {
  if (start_ == end_) throw std::invalid_argument("segment endpoints coincide");
}

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::Clockwise:
      return "clockwise";
    case Orientation::CounterClockwise:
      return "counterclockwise";
    case Orientation::Collinear:
      return "collinear";
  }
  return "?";
}

Integer cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return Integer((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

Orientation orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  return from_sign(sign(cross_r(a, b, c)));
}

Orientation orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return from_sign(sign(cross(a, b, c)));
}

SegmentLocation point_on_segment(const RationalPoint& p, const Segment& s) {
  if (p == s.start() || p == s.end()) return SegmentLocation::Endpoint;
  if (sign(cross_r(s.start(), s.end(), p)) != 0) return SegmentLocation::Off;
  // Collinear: strictly between iff (start - p) . (end - p) < 0.
  if (sign(dot_r(p, s.start(), s.end())) < 0) return SegmentLocation::RelativeInterior;
  return SegmentLocation::Off;
}

SegmentLocation point_on_segment(const LatticePoint& p, const LatticePoint& a,
                                 const LatticePoint& b) {
  if (p == a || p == b) return SegmentLocation::Endpoint;
  if (sign(cross(a, b, p)) != 0) return SegmentLocation::Off;
  Integer d = (a.x - p.x) * (b.x - p.x) + (a.y - p.y) * (b.y - p.y);
  return sign(d) < 0 ? SegmentLocation::RelativeInterior : SegmentLocation::Off;
}

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  const RationalPoint& a = s1.start();
  const RationalPoint& b = s1.end();
  const RationalPoint& c = s2.start();
  const RationalPoint& d = s2.end();

  const int o1 = sign(cross_r(a, b, c));
  const int o2 = sign(cross_r(a, b, d));
  const int o3 = sign(cross_r(c, d, a));
  const int o4 = sign(cross_r(c, d, b));

  if (o1 == 0 && o2 == 0) {
    // Collinear: intersect the parameter intervals along the dominant axis.
    const bool use_x = a.x != b.x;
    auto lo1 = std::cref(a), hi1 = std::cref(b);
    if (axis_coord(hi1, use_x) < axis_coord(lo1, use_x)) std::swap(lo1, hi1);
    auto lo2 = std::cref(c), hi2 = std::cref(d);
    if (axis_coord(hi2, use_x) < axis_coord(lo2, use_x)) std::swap(lo2, hi2);

    const RationalPoint& lo =
        axis_coord(lo1, use_x) < axis_coord(lo2, use_x) ? lo2.get() : lo1.get();
    const RationalPoint& hi =
        axis_coord(hi1, use_x) < axis_coord(hi2, use_x) ? hi1.get() : hi2.get();
    const Rational& l = axis_coord(lo, use_x);
    const Rational& h = axis_coord(hi, use_x);
    if (h < l) return NoIntersection{};
    if (h == l) return lo;
    return Segment(lo, hi);
  }

  if (o1 != o2 && o3 != o4) {
    if (o1 == 0) return c;
    if (o2 == 0) return d;
    if (o3 == 0) return a;
    if (o4 == 0) return b;
    // Proper crossing: a + t (b - a) with t = ((c - a) x (d - c)) / ((b - a) x (d - c)).
    const Rational dcx = d.x - c.x;
    const Rational dcy = d.y - c.y;
    const Rational num = (c.x - a.x) * dcy - (c.y - a.y) * dcx;
    const Rational den = (b.x - a.x) * dcy - (b.y - a.y) * dcx;
    const Rational t = num / den;
    return RationalPoint(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
  }
  return NoIntersection{};
}

Integer gcd_width(const LatticePoint& a, const LatticePoint& b) {
  return boost::multiprecision::gcd(Integer(abs(b.x - a.x)), Integer(abs(b.y - a.y)));
}

bool segments_meet(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                   const LatticePoint& d) {
  const int o1 = sign(cross(a, b, c));
  const int o2 = sign(cross(a, b, d));
  const int o3 = sign(cross(c, d, a));
  const int o4 = sign(cross(c, d, b));
  if (o1 == 0 && o2 == 0) {
    // Collinear: 1D interval test on the dominant axis.
    const bool use_x = a.x != b.x;
    const Integer& a1 = use_x ? a.x : a.y;
    const Integer& b1 = use_x ? b.x : b.y;
    const Integer& c1 = use_x ? c.x : c.y;
    const Integer& d1 = use_x ? d.x : d.y;
    return std::max(std::min(a1, b1), std::min(c1, d1)) <=
           std::min(std::max(a1, b1), std::max(c1, d1));
  }
  return o1 != o2 && o3 != o4;
}

bool segments_overlap(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                      const LatticePoint& d) {
  if (sign(cross(a, b, c)) != 0 || sign(cross(a, b, d)) != 0) return false;
  const bool use_x = a.x != b.x;
  const Integer& a1 = use_x ? a.x : a.y;
  const Integer& b1 = use_x ? b.x : b.y;
  const Integer& c1 = use_x ? c.x : c.y;
  const Integer& d1 = use_x ? d.x : d.y;
  return std::max(std::min(a1, b1), std::min(c1, d1)) <
         std::min(std::max(a1, b1), std::max(c1, d1));
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q = num / den;  // truncates toward zero
  if (num.sign() < 0 && q * den != num) --q;
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  Integer q = num / den;
  if (num.sign() > 0 && q * den != num) ++q;
  return q;
}

}  // namespace lattice_pick
