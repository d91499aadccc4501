#include "lattice_pick/lattice_count.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lattice_pick {

namespace {

// num / den with den > 0.
struct Fraction {
  Integer num;
  Integer den;
};

bool less(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }

struct BoundingBox {
  Integer min_x, max_x, min_y, max_y;
};

BoundingBox bounding_box(const VertexList& vts) {
  BoundingBox box{vts[0].x, vts[0].x, vts[0].y, vts[0].y};
  for (const auto& v : vts) {
    box.min_x = std::min(box.min_x, v.x);
    box.max_x = std::max(box.max_x, v.x);
    box.min_y = std::min(box.min_y, v.y);
    box.max_y = std::max(box.max_y, v.y);
  }
  return box;
}

// Crossings of the vertical line x = c with the edges, using the half-open
// rule min.x <= c < max.x. This is the crossing count of a ray nudged to
// x = c + epsilon, so a lattice point (c, y) off the boundary is inside iff an
// odd number of crossings lie above it.
std::vector<Fraction> column_crossings(const VertexList& vts, const Integer& c) {
  std::vector<Fraction> ys;
  const std::size_t n = vts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint& u = vts[i];
    const LatticePoint& v = vts[(i + 1) % n];
    const LatticePoint& lo = u.x < v.x ? u : v;
    const LatticePoint& hi = u.x < v.x ? v : u;
    if (!(lo.x <= c && c < hi.x)) continue;
    Integer den = hi.x - lo.x;
    Integer num = lo.y * den + (c - lo.x) * (hi.y - lo.y);
    ys.push_back({std::move(num), std::move(den)});
  }
  std::sort(ys.begin(), ys.end(), less);
  return ys;
}

// Boundary lattice points on the column x = c, sorted and deduplicated.
std::vector<Integer> column_boundary_points(const VertexList& vts, const Integer& c) {
  std::vector<Integer> out;
  const std::size_t n = vts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint& u = vts[i];
    const LatticePoint& v = vts[(i + 1) % n];
    if (u.x == v.x) {
      if (u.x != c) continue;
      for (Integer y = std::min(u.y, v.y); y <= std::max(u.y, v.y); ++y) out.push_back(y);
      continue;
    }
    const LatticePoint& lo = u.x < v.x ? u : v;
    const LatticePoint& hi = u.x < v.x ? v : u;
    if (c < lo.x || c > hi.x) continue;
    Integer den = hi.x - lo.x;
    Integer num = lo.y * den + (c - lo.x) * (hi.y - lo.y);
    if (num % den == 0) out.push_back(num / den);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const PickCounts& c) {
  return os << "(I=" << c.interior << ", B=" << c.boundary << ", area2=" << c.area2 << ")";
}

Integer boundary_count(const Polygon& poly) {
  Integer b = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) b += gcd_width(poly[i], poly.vertex(i + 1));
  return b;
}

Integer interior_count(const Polygon& poly) {
  const BoundingBox box = bounding_box(poly.vertices());
  Integer count = 0;
  for (Integer x = box.min_x; x <= box.max_x; ++x) {
    for (Integer y = box.min_y; y <= box.max_y; ++y) {
      if (classify_point(LatticePoint(x, y), poly) == PointLocation::Inside) ++count;
    }
  }
  return count;
}

Integer interior_count_scanline(const Polygon& poly) {
  const auto& vts = poly.vertices();
  const BoundingBox box = bounding_box(vts);
  Integer count = 0;
  for (Integer c = box.min_x; c <= box.max_x; ++c) {
    const auto ys = column_crossings(vts, c);
    if (ys.size() % 2 != 0) throw std::logic_error("odd crossing count on a closed polygon");
    if (ys.empty()) continue;
    const auto boundary = column_boundary_points(vts, c);
    for (std::size_t k = 0; k + 1 < ys.size(); k += 2) {
      const Fraction& lo = ys[k];
      const Fraction& hi = ys[k + 1];
      // Integers strictly inside (lo, hi).
      Integer first = floor_div(lo.num, lo.den) + 1;
      Integer last = ceil_div(hi.num, hi.den) - 1;
      if (last < first) continue;
      count += last - first + 1;
      for (const Integer& y : boundary) {
        if (y >= first && y <= last) --count;
      }
    }
  }
  return count;
}

Integer area2(const Polygon& poly) { return abs(signed_area2(poly.vertices())); }

Integer pick_area2(const Integer& interior, const Integer& boundary) {
  return Integer(2 * interior + boundary - 2);
}

PickCounts count_lattice(const Polygon& poly, CountMethod method) {
  Integer interior =
      method == CountMethod::BruteForce ? interior_count(poly) : interior_count_scanline(poly);
  return {std::move(interior), boundary_count(poly), area2(poly)};
}

PickReport verify_pick(const Polygon& poly, CountMethod method) {
  PickReport report;
  report.counts = count_lattice(poly, method);
  report.pick_area2 = pick_area2(report.counts.interior, report.counts.boundary);
  report.residual = report.counts.area2 - report.pick_area2;
  return report;
}

std::optional<LatticePoint> first_interior_point(const Polygon& triangle) {
  if (triangle.size() != 3) throw std::invalid_argument("first_interior_point needs a triangle");
  const auto& vts = triangle.vertices();
  const BoundingBox box = bounding_box(vts);
  // Interior points of a triangle never sit on the extreme columns, and on any
  // column strictly in between the boundary is met exactly twice.
  for (Integer c = box.min_x + 1; c < box.max_x; ++c) {
    const auto ys = column_crossings(vts, c);
    if (ys.size() != 2) continue;
    Integer y = floor_div(ys[0].num, ys[0].den) + 1;
    if (y * ys[1].den < ys[1].num) return LatticePoint(c, y);
  }
  return std::nullopt;
}

std::string format_area(const Integer& area2) {
  std::ostringstream os;
  if (area2 % 2 == 0) {
    os << area2 / 2;
  } else {
    os << area2 << "/2";
  }
  return os.str();
}

}  // namespace lattice_pick
