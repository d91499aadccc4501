#include "lattice_pick/decompose.hpp"

#include <algorithm>
#include <sstream>

namespace lattice_pick {

namespace {

using Kind = DecomposeError::Kind;

void require_triangle(const Polygon& tri) {
  if (tri.size() != 3) {
    throw DecomposeError(Kind::NotATriangle,
                         "expected 3 vertices, got " + std::to_string(tri.size()));
  }
}

std::optional<std::size_t> index_of(const VertexList& vts, const LatticePoint& p) {
  auto it = std::find(vts.begin(), vts.end(), p);
  if (it == vts.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vts.begin());
}

// Open chain simplicity: distinct vertices, no doubling back at a joint, and
// non-consecutive segments disjoint.
bool is_simple_chain(const VertexList& path) {
  const std::size_t k = path.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (path[i] == path[j]) return false;
    }
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = i + 1; j + 1 < k; ++j) {
      const auto& a = path[i];
      const auto& b = path[i + 1];
      const auto& c = path[j];
      const auto& d = path[j + 1];
      if (j == i + 1) {
        if (segments_overlap(a, b, c, d)) return false;
      } else if (segments_meet(a, b, c, d)) {
        return false;
      }
    }
  }
  return true;
}

bool on_closed_segment(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b) {
  return point_on_segment(p, a, b) != SegmentLocation::Off;
}

// Segment a-b meets segment c-d at most in points of {p, q}.
bool meets_only_in(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                   const LatticePoint& d, const LatticePoint& p, const LatticePoint& q) {
  if (!segments_meet(a, b, c, d)) return true;
  if (segments_overlap(a, b, c, d)) return false;
  // A single common point; it must be p or q.
  return (on_closed_segment(p, a, b) && on_closed_segment(p, c, d)) ||
         (on_closed_segment(q, a, b) && on_closed_segment(q, c, d));
}

DecompositionTree make_leaf(const Polygon& tri) {
  DecompositionTree leaf;
  leaf.kind = NodeKind::Leaf;
  leaf.polygon = tri.vertices();
  leaf.witness = unimodular_witness(tri);
  return leaf;
}

DecompositionTree make_split(VertexList parent, VertexList path) {
  DecompositionTree node;
  node.kind = NodeKind::Split;
  node.polygon = std::move(parent);
  node.path = std::move(path);
  node.children.reserve(2);
  return node;
}

Polygon checked_polygon(VertexList vts, const char* what) {
  try {
    return validate_polygon(std::move(vts));
  } catch (const PolygonError& e) {
    throw DecomposeError(Kind::InternalInvariantViolation,
                         std::string(what) + " is not a polygon: " + e.what());
  }
}

// Boundary lattice point of a triangle that is not a vertex: first edge in
// cyclic order that carries one, nearest to the edge's start.
std::optional<std::pair<std::size_t, LatticePoint>> first_boundary_point(const Polygon& tri) {
  for (std::size_t i = 0; i < 3; ++i) {
    const LatticePoint& u = tri[i];
    const LatticePoint& v = tri.vertex(i + 1);
    Integer g = gcd_width(u, v);
    if (g > 1) {
      return std::pair{i, LatticePoint(u.x + (v.x - u.x) / g, u.y + (v.y - u.y) / g)};
    }
  }
  return std::nullopt;
}

DecompositionTree decompose_triangle(const Polygon& tri);

DecompositionTree split_node_with_children(VertexList parent, VertexList path,
                                           const VertexList& split_parent) {
  auto [left, right] = split_sides(split_parent, path);
  DecompositionTree node = make_split(std::move(parent), std::move(path));
  node.children.push_back(decompose_triangle(checked_polygon(std::move(left), "left side")));
  node.children.push_back(decompose_triangle(checked_polygon(std::move(right), "right side")));
  return node;
}

DecompositionTree decompose_triangle(const Polygon& tri) {
  const auto& v = tri.vertices();
  if (auto p = first_interior_point(tri)) {
    // Two nested splits: first along v0 - p - v1, then the remaining
    // quadrilateral [v1, v2, v0, p] along v2 - p.
    VertexList outer_path{v[0], *p, v[1]};
    auto [left, quad] = split_sides(v, outer_path);
    DecompositionTree node = make_split(v, std::move(outer_path));
    node.children.push_back(decompose_triangle(checked_polygon(std::move(left), "left side")));
    VertexList inner_path{v[2], *p};
    node.children.push_back(split_node_with_children(quad, std::move(inner_path), quad));
    return node;
  }
  if (auto bp = first_boundary_point(tri)) {
    const auto& [edge, q] = *bp;
    VertexList path{tri.vertex(edge + 2), q};
    return split_node_with_children(v, std::move(path), *with_boundary_vertex(v, q));
  }
  return make_leaf(tri);
}

DecompositionTree decompose_impl(const Polygon& poly, DecomposeStats* stats) {
  if (poly.size() == 3) return decompose_triangle(poly);

  if (is_convex(poly)) {
    ConvexChord chord = find_good_linepath_convex(poly);
    if (stats && chord.rule == ChordRule::ExhaustiveScan) ++stats->convex_fallbacks;
    auto [left, right] = split_sides(poly.vertices(), chord.path.vertices);
    DecompositionTree node = make_split(poly.vertices(), std::move(chord.path.vertices));
    node.children.push_back(decompose_impl(checked_polygon(std::move(left), "left side"), stats));
    node.children.push_back(
        decompose_impl(checked_polygon(std::move(right), "right side"), stats));
    return node;
  }

  PocketDecomposition pd = find_pocket(poly);
  DecompositionTree node;
  node.kind = NodeKind::Pocket;
  node.polygon = poly.vertices();
  node.path = pd.pocket_path;
  node.rotation = pd.rotation;
  node.children.reserve(2);
  node.children.push_back(decompose_impl(pd.filled, stats));
  node.children.push_back(decompose_impl(pd.pocket, stats));
  return node;
}

}  // namespace

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Leaf:
      return "leaf";
    case NodeKind::Split:
      return "split";
    case NodeKind::Pocket:
      return "pocket";
  }
  return "?";
}

const char* to_string(ChordRule rule) {
  switch (rule) {
    case ChordRule::NonExtremeVertex:
      return "non-extreme-vertex";
    case ChordRule::ExtremeTriangle:
      return "extreme-triangle";
    case ChordRule::ExhaustiveScan:
      return "exhaustive-scan";
  }
  return "?";
}

LatticePoint UnimodularWitness::apply(const LatticePoint& p) const {
  return {m11 * p.x + m12 * p.y + translation.x, m21 * p.x + m22 * p.y + translation.y};
}

std::size_t leaf_count(const DecompositionTree& tree) {
  if (tree.children.empty()) return 1;
  std::size_t n = 0;
  for (const auto& c : tree.children) n += leaf_count(c);
  return n;
}

std::size_t tree_depth(const DecompositionTree& tree) {
  std::size_t d = 0;
  for (const auto& c : tree.children) d = std::max(d, 1 + tree_depth(c));
  return d;
}

bool contains_pocket(const DecompositionTree& tree) {
  if (tree.kind == NodeKind::Pocket) return true;
  return std::any_of(tree.children.begin(), tree.children.end(),
                     [](const auto& c) { return contains_pocket(c); });
}

bool is_elementary(const Polygon& tri) {
  require_triangle(tri);
  return boundary_count(tri) == 3 && interior_count_scanline(tri) == 0;
}

UnimodularWitness unimodular_witness(const Polygon& tri) {
  require_triangle(tri);
  const auto& v = tri.vertices();
  UnimodularWitness w{v[1].x - v[0].x, v[2].x - v[0].x, v[1].y - v[0].y, v[2].y - v[0].y, v[0]};
  if (abs(w.determinant()) != 1) {
    throw DecomposeError(Kind::NotElementary,
                         "triangle has |det| = " + Integer(abs(w.determinant())).str() + ", not 1");
  }
  return w;
}

TriangleSplit split_triangle(const Polygon& tri) {
  require_triangle(tri);
  const auto& v = tri.vertices();
  if (auto p = first_interior_point(tri)) {
    TriangleSplit out{TriangleSplit::Kind::ThreeWay, *p, {}};
    out.triangles.push_back(validate_polygon({v[0], v[1], *p}));
    out.triangles.push_back(validate_polygon({v[2], v[0], *p}));
    out.triangles.push_back(validate_polygon({*p, v[1], v[2]}));
    return out;
  }
  if (auto bp = first_boundary_point(tri)) {
    const auto& [edge, q] = *bp;
    auto [left, right] = split_sides(*with_boundary_vertex(v, q), {tri.vertex(edge + 2), q});
    TriangleSplit out{TriangleSplit::Kind::TwoWay, q, {}};
    out.triangles.push_back(validate_polygon(std::move(left)));
    out.triangles.push_back(validate_polygon(std::move(right)));
    return out;
  }
  throw DecomposeError(Kind::AlreadyElementary, "triangle is already elementary");
}

bool is_good_path(const Polygon& poly, const VertexList& path) {
  if (path.size() < 2) throw std::invalid_argument("path needs at least 2 vertices");
  const auto& vts = poly.vertices();
  const LatticePoint& first = path.front();
  const LatticePoint& last = path.back();
  if (!index_of(vts, first) || !index_of(vts, last)) {
    throw DecomposeError(Kind::EndpointsNotVertices,
                         "path endpoints must be vertices of the polygon");
  }
  if (!is_simple_chain(path)) return false;

  const std::size_t n = vts.size();
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    for (std::size_t e = 0; e < n; ++e) {
      if (!meets_only_in(path[s], path[s + 1], vts[e], vts[(e + 1) % n], first, last)) {
        return false;
      }
    }
  }
  RationalPoint mid{Rational(path[0].x + path[1].x, 2), Rational(path[0].y + path[1].y, 2)};
  return classify_point(mid, poly) == PointLocation::Inside;
}

std::optional<VertexList> with_boundary_vertex(const VertexList& vts, const LatticePoint& p) {
  if (index_of(vts, p)) return vts;
  const std::size_t n = vts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (point_on_segment(p, vts[i], vts[(i + 1) % n]) == SegmentLocation::RelativeInterior) {
      VertexList out = vts;
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(i + 1), p);
      return out;
    }
  }
  return std::nullopt;
}

std::pair<VertexList, VertexList> split_sides(const VertexList& vts, const VertexList& path) {
  if (path.size() < 2) throw std::invalid_argument("path needs at least 2 vertices");
  auto i = index_of(vts, path.front());
  auto j = index_of(vts, path.back());
  if (!i || !j || *i == *j) {
    throw DecomposeError(Kind::EndpointsNotVertices,
                         "path endpoints must be two distinct vertices of the polygon");
  }
  const std::size_t n = vts.size();
  VertexList left;
  for (std::size_t k = *i;; k = (k + 1) % n) {
    left.push_back(vts[k]);
    if (k == *j) break;
  }
  left.insert(left.end(), path.rbegin() + 1, path.rend() - 1);

  VertexList right;
  for (std::size_t k = *j;; k = (k + 1) % n) {
    right.push_back(vts[k]);
    if (k == *i) break;
  }
  right.insert(right.end(), path.begin() + 1, path.end() - 1);
  return {std::move(left), std::move(right)};
}

Integer path_interior_lattice_count(const VertexList& path) {
  Integer total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) total += gcd_width(path[i], path[i + 1]);
  return Integer(total - 1);
}

ConvexChord find_good_linepath_convex(const Polygon& poly) {
  if (poly.size() < 4) throw std::invalid_argument("convex split needs at least 4 vertices");
  const auto& vts = poly.vertices();
  const VertexList hull = convex_hull(vts);
  auto is_corner = [&](const LatticePoint& p) {
    return std::find(hull.begin(), hull.end(), p) != hull.end();
  };

  if (hull.size() == 3) {
    // A vertex d that is not a corner sits inside some hull edge; the chord
    // goes to the corner opposite that edge.
    auto d = std::find_if(vts.begin(), vts.end(), [&](const auto& p) { return !is_corner(p); });
    if (d != vts.end()) {
      for (std::size_t e = 0; e < 3; ++e) {
        if (point_on_segment(*d, hull[e], hull[(e + 1) % 3]) == SegmentLocation::RelativeInterior) {
          VertexList path{*d, hull[(e + 2) % 3]};
          if (is_good_path(poly, path)) return {SplitPath{std::move(path)}, ChordRule::NonExtremeVertex};
          break;
        }
      }
    }
  } else {
    // First three corners in vertex order; one side of the triangle they span
    // passes through the interior.
    VertexList corners;
    for (const auto& p : vts) {
      if (is_corner(p)) corners.push_back(p);
      if (corners.size() == 3) break;
    }
    for (std::size_t k = 0; k < 3; ++k) {
      VertexList path{corners[k], corners[(k + 1) % 3]};
      if (is_good_path(poly, path)) return {SplitPath{std::move(path)}, ChordRule::ExtremeTriangle};
    }
  }

  const std::size_t n = vts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      VertexList path{vts[i], vts[j]};
      if (is_good_path(poly, path)) return {SplitPath{std::move(path)}, ChordRule::ExhaustiveScan};
    }
  }
  throw DecomposeError(Kind::NoGoodLinepath, "no vertex pair gives a good linepath");
}

std::vector<std::pair<std::size_t, std::size_t>> pocket_runs(const Polygon& poly) {
  const Polygon hull = hull_polygon(poly);
  const std::size_t n = poly.size();
  std::vector<bool> inside(n);
  for (std::size_t i = 0; i < n; ++i) {
    inside[i] = classify_point(poly[i], hull) == PointLocation::Inside;
  }
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t a = 0; a < n; ++a) {
    // A run starts right after a frontier vertex.
    if (inside[a] || !inside[(a + 1) % n]) continue;
    std::size_t m = 0;
    while (inside[(a + 1 + m) % n]) ++m;
    runs.emplace_back(a, m);
  }
  return runs;
}

std::pair<VertexList, VertexList> pocket_sides(const VertexList& vts, std::size_t rotation,
                                               std::size_t m) {
  const VertexList rotated = rotate_vertices(vts, rotation);
  VertexList pocket(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(m + 2));
  VertexList filled;
  filled.push_back(rotated[0]);
  filled.insert(filled.end(), rotated.begin() + static_cast<std::ptrdiff_t>(m + 1), rotated.end());
  return {std::move(filled), std::move(pocket)};
}

bool meets_only_at_endpoints(const VertexList& vts, const LatticePoint& a, const LatticePoint& b) {
  const std::size_t n = vts.size();
  for (std::size_t e = 0; e < n; ++e) {
    if (!meets_only_in(a, b, vts[e], vts[(e + 1) % n], a, b)) return false;
  }
  return true;
}

PocketDecomposition find_pocket(const Polygon& poly) {
  auto runs = pocket_runs(poly);
  if (runs.empty()) throw DecomposeError(Kind::PolygonConvex, "polygon is convex; no pocket");
  // Smallest rotation wins; runs are produced in increasing order of a.
  const auto [rotation, m] = runs.front();

  auto [filled, pocket] = pocket_sides(poly.vertices(), rotation, m);
  const LatticePoint& a = pocket.front();
  const LatticePoint& b = pocket.back();
  if (!meets_only_at_endpoints(poly.vertices(), b, a)) {
    throw DecomposeError(Kind::InternalInvariantViolation,
                         "filling segment " + to_string(b) + "-" + to_string(a) +
                             " touches the polygon away from its endpoints");
  }
  PocketDecomposition pd{rotation, pocket, checked_polygon(pocket, "pocket"),
                         checked_polygon(std::move(filled), "filled polygon")};
  return pd;
}

PickCounts pick_union_counts(UnionKind kind, const PickCounts& c1, const PickCounts& c2,
                             const Integer& path_interior) {
  PickCounts out;
  const Integer& s = path_interior;
  if (kind == UnionKind::Split) {
    out.interior = c1.interior + c2.interior + s;
    out.boundary = c1.boundary + c2.boundary - 2 * s - 2;
    out.area2 = c1.area2 + c2.area2;
  } else {
    out.interior = c1.interior - c2.interior - s;
    out.boundary = c1.boundary - c2.boundary + 2 * s + 2;
    out.area2 = c1.area2 - c2.area2;
  }
  if (out.interior.sign() < 0 || out.boundary.sign() < 0 || out.area2.sign() < 0) {
    std::ostringstream msg;
    msg << "recombined counts are negative: " << out;
    throw DecomposeError(Kind::NegativeCount, msg.str());
  }
  return out;
}

DecompositionTree decompose(const Polygon& poly, DecomposeStats* stats) {
  return decompose_impl(poly, stats);
}

}  // namespace lattice_pick
