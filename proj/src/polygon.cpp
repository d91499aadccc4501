#include "lattice_pick/polygon.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace lattice_pick {

namespace {

bool adjacent_edges(std::size_t i, std::size_t j, std::size_t n) {
  return j == i + 1 || (i == 0 && j == n - 1);
}

// For adjacent edges meeting at `shared`, with far endpoints `p` and `q`:
// they overlap iff p and q lie on the same ray from `shared`.
bool doubles_back(const LatticePoint& p, const LatticePoint& shared, const LatticePoint& q) {
  if (cross(shared, p, q).sign() != 0) return false;
  Integer d = (p.x - shared.x) * (q.x - shared.x) + (p.y - shared.y) * (q.y - shared.y);
  return d.sign() > 0;
}

struct Homogeneous {
  Integer x;
  Integer y;
};

// Counts crossings of the ray from the origin along (k, 1) with the closed
// chain `pts` (already translated so the query point is the origin). Returns
// nullopt if the ray passes through a vertex.
std::optional<std::size_t> ray_crossings(const std::vector<Homogeneous>& pts, long k) {
  const Integer dk(k);
  std::size_t n = pts.size();
  std::vector<int> side(n);
  for (std::size_t i = 0; i < n; ++i) {
    // cross((k,1), v) = k*v.y - v.x ; dot = k*v.x + v.y
    Integer c = dk * pts[i].y - pts[i].x;
    side[i] = c.sign();
    if (side[i] == 0) {
      Integer d = dk * pts[i].x + pts[i].y;
      if (d.sign() > 0) return std::nullopt;
    }
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    if (side[i] * side[j] >= 0) continue;
    const Homogeneous& u = pts[i];
    const Homogeneous& v = pts[j];
    Integer ex = v.x - u.x;
    Integer ey = v.y - u.y;
    // Ray parameter t satisfies t * cross(d, e) = cross(u, e).
    Integer ue = u.x * ey - u.y * ex;
    Integer de = dk * ey - ex;
    if (ue.sign() == de.sign()) ++count;
  }
  return count;
}

PointLocation classify_scaled(std::vector<Homogeneous> pts) {
  static constexpr std::array<long, 24> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19,
                                                   23, 29, 31, 37, 41, 43, 47, 53,
                                                   59, 61, 67, 71, 73, 79, 83, 89};
  for (long k : kPrimes) {
    if (auto c = ray_crossings(pts, k)) return (*c % 2 == 1) ? PointLocation::Inside
                                                             : PointLocation::Outside;
  }
  // Each vertex blocks at most one slope, so primes past the vertex count
  // always succeed.
  for (long k = 97;; k += 2) {
    if (auto c = ray_crossings(pts, k)) return (*c % 2 == 1) ? PointLocation::Inside
                                                             : PointLocation::Outside;
  }
}

}  // namespace

std::optional<EdgePair> find_self_intersection(std::span<const LatticePoint> vts) {
  const std::size_t n = vts.size();
  if (n < 3) return EdgePair{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    if (vts[i] == vts[(i + 1) % n]) return EdgePair{i, i};
  }
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint& a = vts[i];
    const LatticePoint& b = vts[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const LatticePoint& c = vts[j];
      const LatticePoint& d = vts[(j + 1) % n];
      if (adjacent_edges(i, j, n)) {
        // Shared vertex is b when j == i + 1, otherwise a (i == 0, j == n - 1).
        bool bad = (j == i + 1) ? doubles_back(a, b, d) : doubles_back(b, a, c);
        // With n == 3 every pair is adjacent twice over; the overlap test on
        // the shared vertex covers it.
        if (bad) return EdgePair{i, j};
      } else if (segments_meet(a, b, c, d)) {
        return EdgePair{i, j};
      }
    }
  }
  return std::nullopt;
}

bool is_simple(std::span<const LatticePoint> vts) { return !find_self_intersection(vts); }

Polygon validate_polygon(VertexList vts) {
  const std::size_t n = vts.size();
  if (n < 3) {
    throw PolygonError(PolygonError::Kind::TooFewVertices,
                       "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (vts[i] == vts[(i + 1) % n]) {
      throw PolygonError(PolygonError::Kind::DegenerateEdge,
                         "edge " + std::to_string(i) + " has zero length at " +
                             to_string(vts[i]),
                         EdgePair{i, i});
    }
  }
  if (auto bad = find_self_intersection(vts)) {
    auto [i, j] = *bad;
    std::ostringstream msg;
    msg << "not simple: edges " << i << "-" << (i + 1) % n << " and " << j << "-"
        << (j + 1) % n << " intersect";
    throw PolygonError(PolygonError::Kind::NotSimple, msg.str(), bad);
  }
  Integer a2 = signed_area2(vts);
  Orientation o = a2.sign() > 0 ? Orientation::CounterClockwise : Orientation::Clockwise;
  return Polygon(std::move(vts), o);
}

VertexList rotate_vertices(std::span<const LatticePoint> vts, std::size_t k) {
  VertexList out(vts.begin(), vts.end());
  if (!out.empty()) {
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()),
                out.end());
  }
  return out;
}

Integer signed_area2(std::span<const LatticePoint> vts) {
  Integer sum = 0;
  const std::size_t n = vts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint& p = vts[i];
    const LatticePoint& q = vts[(i + 1) % n];
    sum += p.x * q.y - q.x * p.y;
  }
  return sum;
}

const char* to_string(PointLocation loc) {
  switch (loc) {
    case PointLocation::Inside:
      return "inside";
    case PointLocation::OnBoundary:
      return "boundary";
    case PointLocation::Outside:
      return "outside";
  }
  return "?";
}

PointLocation classify_point(const LatticePoint& p, const Polygon& poly) {
  const auto& vts = poly.vertices();
  const std::size_t n = vts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (point_on_segment(p, vts[i], vts[(i + 1) % n]) != SegmentLocation::Off) {
      return PointLocation::OnBoundary;
    }
  }
  std::vector<Homogeneous> pts;
  pts.reserve(n);
  for (const auto& v : vts) pts.push_back({v.x - p.x, v.y - p.y});
  return classify_scaled(std::move(pts));
}

PointLocation classify_point(const RationalPoint& p, const Polygon& poly) {
  if (p.is_lattice()) return classify_point(p.to_lattice(), poly);
  const auto& vts = poly.vertices();
  const std::size_t n = vts.size();
  // Scale by the common denominator so every test stays integral.
  const Integer dx = denominator(p.x);
  const Integer dy = denominator(p.y);
  const Integer scale = boost::multiprecision::lcm(dx, dy);
  const Integer px = numerator(p.x) * (scale / dx);
  const Integer py = numerator(p.y) * (scale / dy);
  std::vector<Homogeneous> pts;
  pts.reserve(n);
  for (const auto& v : vts) pts.push_back({v.x * scale - px, v.y * scale - py});
  // The origin lies on segment u-v iff u, v are collinear with it and on opposite sides.
  for (std::size_t i = 0; i < n; ++i) {
    const Homogeneous& u = pts[i];
    const Homogeneous& v = pts[(i + 1) % n];
    if (Integer(u.x * v.y - u.y * v.x).is_zero() && Integer(u.x * v.x + u.y * v.y).sign() <= 0) {
      return PointLocation::OnBoundary;
    }
  }
  return classify_scaled(std::move(pts));
}

VertexList convex_hull(std::span<const LatticePoint> pts) {
  VertexList sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 3) throw HullError("convex hull is degenerate: fewer than 3 points");

  // Andrew's monotone chain; pops on non-left turns so collinear points are
  // discarded.
  VertexList hull(2 * sorted.size());
  std::size_t k = 0;
  for (const auto& p : sorted) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = sorted.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = sorted[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw HullError("convex hull is degenerate: all points are collinear");
  return hull;
}

Polygon hull_polygon(const Polygon& poly) { return validate_polygon(convex_hull(poly.vertices())); }

std::size_t extreme_point_count(const Polygon& poly) {
  return convex_hull(poly.vertices()).size();
}

bool is_convex(const Polygon& poly) {
  const Polygon hull = hull_polygon(poly);
  return std::none_of(poly.vertices().begin(), poly.vertices().end(), [&](const auto& v) {
    return classify_point(v, hull) == PointLocation::Inside;
  });
}

}  // namespace lattice_pick
