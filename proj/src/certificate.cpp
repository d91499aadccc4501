#include "lattice_pick/certificate.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace lattice_pick {

namespace {

using nlohmann::json;

// --- serialization -----------------------------------------------------------

// Writes compact JSON with keys in sorted order, matching json::dump().
class Writer {
 public:
  std::string out;

  void integer(const Integer& v) {
    out += '"';
    out += v.str();
    out += '"';
  }

  void point(const LatticePoint& p) {
    out += '[';
    integer(p.x);
    out += ',';
    integer(p.y);
    out += ']';
  }

  void points(const VertexList& pts) {
    out += '[';
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ',';
      point(pts[i]);
    }
    out += ']';
  }

  void node(const DecompositionTree& n) {
    if (n.kind == NodeKind::Leaf) {
      const auto& w = n.witness;
      out += R"({"kind":"leaf","polygon":)";
      points(n.polygon);
      out += R"(,"witness":{"m":[[)";
      integer(w.m11);
      out += ',';
      integer(w.m12);
      out += "],[";
      integer(w.m21);
      out += ',';
      integer(w.m22);
      out += R"(]],"t":)";
      point(w.translation);
      out += "}}";
      return;
    }
    out += R"({"children":[)";
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i) out += ',';
      node(n.children[i]);
    }
    out += R"(],"kind":")";
    out += to_string(n.kind);
    out += R"(","path":)";
    points(n.path);
    out += R"(,"polygon":)";
    points(n.polygon);
    if (n.kind == NodeKind::Pocket) {
      out += R"(,"rotation":)";
      out += std::to_string(n.rotation);
    }
    out += '}';
  }
};

// --- deserialization ---------------------------------------------------------

// JSON pointer to the value being read, rendered only when an error is thrown.
struct Where {
  const Where* parent = nullptr;
  const char* key = nullptr;
  std::size_t index = 0;

  Where at(const char* k) const { return {this, k, 0}; }
  Where at(std::size_t i) const { return {this, nullptr, i}; }

  std::string str() const {
    if (!parent) return key ? key : "";
    return parent->str() + "/" + (key ? std::string(key) : std::to_string(index));
  }
};

[[noreturn]] void malformed(const std::string& msg, const Where& where) {
  const std::string w = where.str();
  throw MalformedCertificate(msg, w.empty() ? "/" : w);
}

const json& field(const json& obj, const char* key, const Where& where) {
  if (!obj.is_object()) malformed("expected an object", where);
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing field '") + key + "'", where);
  return *it;
}

Integer integer_from_json(const json& j, const Where& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (!j.is_string()) malformed("expected an integer as a decimal string", where);
  const auto& s = j.get_ref<const std::string&>();
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                        [](char c) { return c >= '0' && c <= '9'; })) {
    malformed("'" + s + "' is not a decimal integer", where);
  }
  if (s.size() - start < 18) return Integer(std::stoll(s));
  return Integer(s);
}

LatticePoint point_from_json(const json& j, const Where& where) {
  if (!j.is_array() || j.size() != 2) malformed("expected an [x, y] pair", where);
  return {integer_from_json(j[0], where.at(std::size_t{0})),
          integer_from_json(j[1], where.at(std::size_t{1}))};
}

VertexList points_from_json(const json& j, const Where& where) {
  if (!j.is_array()) malformed("expected an array of points", where);
  VertexList out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_from_json(j[i], where.at(i)));
  return out;
}

DecompositionTree node_from_json(const json& j, const Where& where) {
  DecompositionTree node;
  node.children.reserve(2);
  const json& kind = field(j, "kind", where);
  if (!kind.is_string()) malformed("'kind' must be a string", where.at("kind"));
  const auto& k = kind.get_ref<const std::string&>();
  node.polygon = points_from_json(field(j, "polygon", where), where.at("polygon"));
  if (k == "leaf") {
    node.kind = NodeKind::Leaf;
    const Where wpath = where.at("witness");
    const Where mpath = wpath.at("m");
    const json& w = field(j, "witness", where);
    const json& m = field(w, "m", wpath);
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
        !m[1].is_array() || m[1].size() != 2) {
      malformed("witness matrix must be 2x2", mpath);
    }
    const Where row0 = mpath.at(std::size_t{0}), row1 = mpath.at(std::size_t{1});
    node.witness.m11 = integer_from_json(m[0][0], row0.at(std::size_t{0}));
    node.witness.m12 = integer_from_json(m[0][1], row0.at(std::size_t{1}));
    node.witness.m21 = integer_from_json(m[1][0], row1.at(std::size_t{0}));
    node.witness.m22 = integer_from_json(m[1][1], row1.at(std::size_t{1}));
    node.witness.translation = point_from_json(field(w, "t", wpath), wpath.at("t"));
    return node;
  }
  if (k == "split") {
    node.kind = NodeKind::Split;
  } else if (k == "pocket") {
    node.kind = NodeKind::Pocket;
    const json& r = field(j, "rotation", where);
    if (!r.is_number_unsigned()) malformed("'rotation' must be a non-negative integer", where.at("rotation"));
    node.rotation = r.get<std::size_t>();
  } else {
    malformed("unknown node kind '" + k + "'", where.at("kind"));
  }
  node.path = points_from_json(field(j, "path", where), where.at("path"));
  const json& children = field(j, "children", where);
  const Where cpath = where.at("children");
  if (!children.is_array() || children.size() != 2) {
    malformed("expected exactly 2 children", cpath);
  }
  for (std::size_t i = 0; i < 2; ++i) node.children.push_back(node_from_json(children[i], cpath.at(i)));
  return node;
}

// --- checking ----------------------------------------------------------------

std::optional<Polygon> try_polygon(const VertexList& vts, std::string* error) {
  try {
    return validate_polygon(vts);
  } catch (const PolygonError& e) {
    *error = e.what();
    return std::nullopt;
  }
}

std::string describe(const VertexList& vts) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vts.size(); ++i) os << (i ? "," : "") << vts[i];
  os << ']';
  return os.str();
}

class Checker {
 public:
  std::vector<Violation> violations;

  std::optional<PickCounts> check(const DecompositionTree& node, const std::string& tp) {
    const std::size_t expected_children = node.kind == NodeKind::Leaf ? 0 : 2;
    if (node.children.size() != expected_children) {
      throw MalformedCertificate(std::string(to_string(node.kind)) + " node has " +
                                     std::to_string(node.children.size()) + " children",
                                 tp);
    }
    std::vector<std::optional<PickCounts>> child_counts;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      child_counts.push_back(check(node.children[i], tp + "." + std::to_string(i)));
    }

    std::string error;
    std::optional<Polygon> poly = try_polygon(node.polygon, &error);
    if (!poly) add(tp, "node.polygon", error);

    switch (node.kind) {
      case NodeKind::Leaf:
        return poly ? check_leaf(*poly, node, tp) : std::nullopt;
      case NodeKind::Split:
        if (poly) check_split(*poly, node, tp);
        return combine(UnionKind::Split, node, poly, child_counts, tp);
      case NodeKind::Pocket:
        if (poly) check_pocket(*poly, node, tp);
        return combine(UnionKind::PocketSplit, node, poly, child_counts, tp);
    }
    return std::nullopt;
  }

 private:
  void add(const std::string& tp, std::string rule, std::string message) {
    violations.push_back({tp, std::move(rule), std::move(message)});
  }

  std::optional<PickCounts> check_leaf(const Polygon& tri, const DecompositionTree& node,
                                       const std::string& tp) {
    if (tri.size() != 3) {
      add(tp, "leaf.vertex_count", "leaf has " + std::to_string(tri.size()) + " vertices");
      return std::nullopt;
    }
    const auto& w = node.witness;
    std::vector<std::string> problems;
    if (abs(w.determinant()) != 1) problems.push_back("|det| = " + Integer(abs(w.determinant())).str());
    const LatticePoint unit[3] = {{0, 0}, {1, 0}, {0, 1}};
    for (std::size_t i = 0; i < 3; ++i) {
      LatticePoint image = w.apply(unit[i]);
      if (image != tri[i]) {
        problems.push_back("maps " + to_string(unit[i]) + " to " + to_string(image) +
                           " instead of " + to_string(tri[i]));
      }
    }
    if (!problems.empty()) {
      std::string msg = "witness rejected:";
      for (const auto& p : problems) msg += " " + p + ";";
      msg.pop_back();
      add(tp, "leaf.witness", msg);
    }
    // A unimodular image of the unit triangle has no interior lattice points,
    // so a valid witness settles I = 0; otherwise count directly.
    PickCounts counts = problems.empty() ? PickCounts{0, boundary_count(tri), area2(tri)}
                                         : count_lattice(tri, CountMethod::Scanline);
    if (counts.interior != 0 || counts.boundary != 3) {
      std::ostringstream os;
      os << "leaf is not elementary: " << counts;
      add(tp, "leaf.not_elementary", os.str());
    }
    return counts;
  }

  void check_split(const Polygon& poly, const DecompositionTree& node, const std::string& tp) {
    const auto& path = node.path;
    if (path.size() < 2) {
      add(tp, "split.path", "split path has fewer than 2 vertices");
      return;
    }
    std::optional<VertexList> parent = with_boundary_vertex(poly.vertices(), path.front());
    if (parent) parent = with_boundary_vertex(*parent, path.back());
    if (!parent || path.front() == path.back()) {
      add(tp, "split.path_endpoints",
          "path endpoints must be two distinct boundary lattice points of " + describe(poly.vertices()));
      return;
    }
    const Polygon subdivided = validate_polygon(*parent);
    if (!is_good_path(subdivided, path)) {
      add(tp, "split.good_path", "path " + describe(path) + " is not a good path");
    }
    auto [left, right] = split_sides(*parent, path);
    if (node.children[0].polygon != left || node.children[1].polygon != right) {
      add(tp, "split.children",
          "children must be " + describe(left) + " and " + describe(right));
    }
  }

  void check_pocket(const Polygon& poly, const DecompositionTree& node, const std::string& tp) {
    const auto& vts = poly.vertices();
    const auto& path = node.path;
    const std::size_t n = vts.size();
    if (node.rotation >= n) {
      add(tp, "pocket.rotation", "rotation " + std::to_string(node.rotation) + " out of range");
      return;
    }
    const VertexList rotated = rotate_vertices(vts, node.rotation);
    if (path.size() < 3 || path.size() >= n ||
        !std::equal(path.begin(), path.end(), rotated.begin())) {
      add(tp, "pocket.path", "pocket path must be a prefix (length 3..n-1) of the rotated polygon");
      return;
    }
    const Polygon hull = hull_polygon(poly);
    const std::size_t m = path.size() - 2;
    for (const LatticePoint* end : {&path.front(), &path.back()}) {
      if (classify_point(*end, hull) == PointLocation::Inside) {
        add(tp, "pocket.endpoint_frontier", to_string(*end) + " is not on the hull frontier");
      }
    }
    for (std::size_t i = 1; i <= m; ++i) {
      if (classify_point(path[i], hull) != PointLocation::Inside) {
        add(tp, "pocket.interior_vertex", to_string(path[i]) + " is not strictly inside the hull");
      }
    }
    if (!meets_only_at_endpoints(vts, path.back(), path.front())) {
      add(tp, "pocket.filling_segment", "filling segment meets the polygon away from its endpoints");
    }
    auto [filled, pocket] = pocket_sides(vts, node.rotation, m);
    if (node.children[0].polygon != filled || node.children[1].polygon != pocket) {
      add(tp, "pocket.children",
          "children must be " + describe(filled) + " and " + describe(pocket));
    }
  }

  std::optional<PickCounts> combine(UnionKind kind, const DecompositionTree& node,
                                    const std::optional<Polygon>& poly,
                                    const std::vector<std::optional<PickCounts>>& child_counts,
                                    const std::string& tp) {
    if (!child_counts[0] || !child_counts[1] || node.path.size() < 2) return std::nullopt;
    PickCounts counts;
    try {
      counts = pick_union_counts(kind, *child_counts[0], *child_counts[1],
                                 path_interior_lattice_count(node.path));
    } catch (const DecomposeError& e) {
      add(tp, "counts.negative", e.what());
      return std::nullopt;
    }
    if (poly && counts.area2 != area2(*poly)) {
      add(tp, "counts.area",
          "recombined area2 " + counts.area2.str() + " differs from " + area2(*poly).str());
    }
    return counts;
  }
};

}  // namespace

Certificate make_certificate(const Polygon& poly, DecompositionTree tree) {
  Certificate cert;
  cert.root_polygon = poly.vertices();
  cert.tree = std::move(tree);
  return cert;
}

std::string serialize(const Certificate& cert) {
  Writer w;
  w.out += R"({"format_version":)";
  w.out += json(cert.format_version).dump();
  w.out += R"(,"polygon":)";
  w.points(cert.root_polygon);
  w.out += R"(,"tree":)";
  w.node(cert.tree);
  w.out += '}';
  return w.out;
}

Certificate deserialize(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw MalformedCertificate(std::string("invalid JSON: ") + e.what(),
                               "byte " + std::to_string(e.byte));
  }
  Certificate cert;
  const Where root;
  const json& version = field(doc, "format_version", root);
  if (!version.is_string()) malformed("'format_version' must be a string", root.at("format_version"));
  cert.format_version = version.get<std::string>();
  if (cert.format_version != kCertificateFormatVersion) {
    malformed("unsupported format_version '" + cert.format_version + "', expected '" +
                  std::string(kCertificateFormatVersion) + "'",
              root.at("format_version"));
  }
  cert.root_polygon = points_from_json(field(doc, "polygon", root), root.at("polygon"));
  cert.tree = node_from_json(field(doc, "tree", root), root.at("tree"));
  return cert;
}

CheckReport check_certificate(const Certificate& cert) {
  if (cert.format_version != kCertificateFormatVersion) {
    throw MalformedCertificate("unsupported format_version '" + cert.format_version + "'",
                               "/format_version");
  }
  Checker checker;
  CheckReport report;
  if (cert.tree.polygon != cert.root_polygon) {
    checker.violations.push_back(
        {"root", "root.polygon", "tree root does not describe the certified polygon"});
  }
  report.root_counts = checker.check(cert.tree, "root");

  std::string error;
  if (auto root = try_polygon(cert.root_polygon, &error); root && report.root_counts) {
    report.residual =
        area2(*root) - pick_area2(report.root_counts->interior, report.root_counts->boundary);
  }
  report.violations = std::move(checker.violations);
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.tree_path < b.tree_path; });
  report.valid = report.violations.empty() && report.residual && report.residual->is_zero();
  return report;
}

}  // namespace lattice_pick
