#include "lattice_pick/polygon_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace lattice_pick {

namespace {

using nlohmann::json;

Integer parse_coordinate(const json& j, std::size_t index, int axis) {
  const std::string where =
      "vertex " + std::to_string(index) + (axis == 0 ? " x" : " y");
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                        [](char c) { return c >= '0' && c <= '9'; })) {
      return Integer(s);
    }
  }
  throw PolygonParseError(where + ": expected an integer, got " + j.dump());
}

json coordinate_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

}  // namespace

PolygonFile parse_polygon_file(std::string_view text, std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw PolygonParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw PolygonParseError("top level must be an object");
  auto it = doc.find("vertices");
  if (it == doc.end()) throw PolygonParseError("missing 'vertices'");
  if (!it->is_array()) throw PolygonParseError("'vertices' must be an array");

  PolygonFile file;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& p = (*it)[i];
    if (!p.is_array() || p.size() != 2) {
      throw PolygonParseError("vertex " + std::to_string(i) + ": expected an [x, y] pair");
    }
    file.vertices.emplace_back(parse_coordinate(p[0], i, 0), parse_coordinate(p[1], i, 1));
  }
  if (file.vertices.size() >= 2 && file.vertices.front() == file.vertices.back()) {
    file.vertices.pop_back();
    if (warnings) warnings->push_back("dropped repeated closing vertex " + to_string(file.vertices.front()));
  }
  if (auto name = doc.find("name"); name != doc.end()) {
    if (!name->is_string()) throw PolygonParseError("'name' must be a string");
    file.name = name->get<std::string>();
  }
  return file;
}

std::string format_polygon_file(const PolygonFile& file) {
  json doc;
  if (file.name) doc["name"] = *file.name;
  json vts = json::array();
  for (const auto& v : file.vertices) {
    vts.push_back(json::array({coordinate_to_json(v.x), coordinate_to_json(v.y)}));
  }
  doc["vertices"] = std::move(vts);
  return doc.dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PolygonParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace lattice_pick
