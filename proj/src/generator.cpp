#include "lattice_pick/generator.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace lattice_pick {

namespace {

// Vector from the centroid, scaled by n to stay integral.
struct Offset {
  Integer dx;
  Integer dy;
};

// 0 for angles in [0, pi), 1 for [pi, 2 pi); the zero vector sorts first.
int half_plane(const Offset& o) {
  if (o.dx.is_zero() && o.dy.is_zero()) return -1;
  return (o.dy.sign() > 0 || (o.dy.is_zero() && o.dx.sign() > 0)) ? 0 : 1;
}

bool angle_less(const Offset& a, const Offset& b) {
  int ha = half_plane(a);
  int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  Integer c = a.dx * b.dy - a.dy * b.dx;
  if (!c.is_zero()) return c.sign() > 0;
  return a.dx * a.dx + a.dy * a.dy < b.dx * b.dx + b.dy * b.dy;
}

}  // namespace

Polygon generate_polygon(const GeneratorConfig& config) {
  if (config.vertex_count < 3) throw std::invalid_argument("vertex_count must be at least 3");
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::uint64_t> coord(0, config.coord_bound);
  const std::size_t n = config.vertex_count;

  for (std::size_t attempt = 0; attempt < config.max_retries; ++attempt) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::vector<LatticePoint> pts;
    for (std::size_t draws = 0; pts.size() < n && draws < 8 * n; ++draws) {
      std::uint64_t x = coord(rng);
      std::uint64_t y = coord(rng);
      if (seen.emplace(x, y).second) pts.emplace_back(Integer(x), Integer(y));
    }
    if (pts.size() < n) continue;

    Integer sx = 0, sy = 0;
    for (const auto& p : pts) {
      sx += p.x;
      sy += p.y;
    }
    const Integer scale(n);
    std::vector<std::pair<Offset, std::size_t>> order;
    for (std::size_t i = 0; i < n; ++i) {
      order.push_back({{pts[i].x * scale - sx, pts[i].y * scale - sy}, i});
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    VertexList vts;
    for (const auto& [off, i] : order) vts.push_back(pts[i]);
    if (is_simple(vts)) return validate_polygon(std::move(vts));
  }
  throw GenerationExhausted("no simple polygon with " + std::to_string(n) + " vertices in [0, " +
                            std::to_string(config.coord_bound) + "]^2 after " +
                            std::to_string(config.max_retries) + " attempts");
}

}  // namespace lattice_pick
