#include "lattice_pick/svg.hpp"

#include "lattice_pick/decompose.hpp"

#include <algorithm>
#include <sstream>

namespace lattice_pick {

namespace {

constexpr int kPixelsPerUnit = 40;

class Canvas {
 public:
  explicit Canvas(const VertexList& vts) : min_x_(vts[0].x), max_y_(vts[0].y) {
    Integer max_x = vts[0].x, min_y = vts[0].y;
    for (const auto& v : vts) {
      min_x_ = std::min(min_x_, v.x);
      max_x = std::max(max_x, v.x);
      min_y = std::min(min_y, v.y);
      max_y_ = std::max(max_y_, v.y);
    }
    width_ = max_x - min_x_ + 2;
    height_ = max_y_ - min_y + 2;
  }

  // SVG coordinates with the 1-unit margin and a flipped y axis.
  std::string xy(const LatticePoint& p) const {
    std::ostringstream os;
    os << (p.x - min_x_ + 1) << ',' << (max_y_ - p.y + 1);
    return os.str();
  }
  Integer sx(const LatticePoint& p) const { return p.x - min_x_ + 1; }
  Integer sy(const LatticePoint& p) const { return max_y_ - p.y + 1; }

  std::string points(const VertexList& vts) const {
    std::string out;
    for (std::size_t i = 0; i < vts.size(); ++i) {
      if (i) out += ' ';
      out += xy(vts[i]);
    }
    return out;
  }

  const Integer& width() const { return width_; }
  const Integer& height() const { return height_; }

 private:
  Integer min_x_;
  Integer max_y_;
  Integer width_;
  Integer height_;
};

void collect_leaves(const DecompositionTree& node, std::vector<const VertexList*>& out) {
  if (node.kind == NodeKind::Leaf) {
    out.push_back(&node.polygon);
    return;
  }
  for (const auto& c : node.children) collect_leaves(c, out);
}

}  // namespace

std::string render_svg(const Polygon& poly, const SvgOptions& options) {
  const Canvas canvas(poly.vertices());
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << canvas.width() << ' '
     << canvas.height() << "\" width=\"" << canvas.width() * kPixelsPerUnit << "\" height=\""
     << canvas.height() * kPixelsPerUnit << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << canvas.width() << "\" height=\"" << canvas.height()
     << "\" fill=\"white\"/>\n";

  if (options.show_pockets) {
    const auto runs = pocket_runs(poly);
    if (!runs.empty()) {
      const PocketDecomposition chosen = find_pocket(poly);
      os << "  <g id=\"pockets\">\n";
      for (const auto& [rotation, m] : runs) {
        auto [filled, pocket] = pocket_sides(poly.vertices(), rotation, m);
        const bool selected = rotation == chosen.rotation;
        if (selected) {
          os << "    <polygon points=\"" << canvas.points(pocket)
             << "\" fill=\"orange\" fill-opacity=\"0.5\" stroke=\"orange\" stroke-width=\"0.06\"/>\n";
        }
        os << "    <line x1=\"" << canvas.sx(pocket.back()) << "\" y1=\"" << canvas.sy(pocket.back())
           << "\" x2=\"" << canvas.sx(pocket.front()) << "\" y2=\"" << canvas.sy(pocket.front())
           << "\" stroke=\"orange\" stroke-width=\"0.06\""
           << (selected ? "" : " stroke-dasharray=\"0.1 0.1\"") << "/>\n";
      }
      os << "  </g>\n";
    }
  }

  if (options.show_decomposition) {
    const DecompositionTree tree = decompose(poly);
    std::vector<const VertexList*> leaves;
    collect_leaves(tree, leaves);
    os << "  <g id=\"decomposition\" fill=\"none\" stroke=\"grey\" stroke-width=\"0.02\">\n";
    for (const VertexList* leaf : leaves) {
      os << "    <polygon points=\"" << canvas.points(*leaf) << "\"/>\n";
    }
    os << "  </g>\n";
  }

  if (options.show_hull) {
    os << "  <polygon id=\"hull\" points=\"" << canvas.points(convex_hull(poly.vertices()))
       << "\" fill=\"none\" stroke=\"grey\" stroke-width=\"0.04\" stroke-dasharray=\"0.2 0.1\"/>\n";
  }

  os << "  <polygon id=\"polygon\" points=\"" << canvas.points(poly.vertices())
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.06\" stroke-linejoin=\"round\"/>\n";

  if (options.show_lattice) {
    VertexList boundary, interior;
    Integer min_x = poly[0].x, max_x = poly[0].x, min_y = poly[0].y, max_y = poly[0].y;
    for (const auto& v : poly.vertices()) {
      min_x = std::min(min_x, v.x);
      max_x = std::max(max_x, v.x);
      min_y = std::min(min_y, v.y);
      max_y = std::max(max_y, v.y);
    }
    for (Integer x = min_x; x <= max_x; ++x) {
      for (Integer y = min_y; y <= max_y; ++y) {
        LatticePoint p(x, y);
        switch (classify_point(p, poly)) {
          case PointLocation::OnBoundary:
            boundary.push_back(p);
            break;
          case PointLocation::Inside:
            interior.push_back(p);
            break;
          case PointLocation::Outside:
            break;
        }
      }
    }
    auto emit = [&](const char* id, const char* colour, const VertexList& pts) {
      os << "  <g id=\"" << id << "\" fill=\"" << colour << "\">\n";
      for (const auto& p : pts) {
        os << "    <circle cx=\"" << canvas.sx(p) << "\" cy=\"" << canvas.sy(p) << "\" r=\"0.12\"/>\n";
      }
      os << "  </g>\n";
    };
    emit("boundary-points", "blue", boundary);
    emit("interior-points", "green", interior);
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace lattice_pick
