#pragma once

#include "lattice_pick/polygon.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lattice_pick {

/// `{"vertices": [[x, y], ...], "name": "..."}`. Coordinates are JSON integers
/// or decimal strings.
struct PolygonFile {
  VertexList vertices;
  std::optional<std::string> name;
};

/// Syntax or schema problem; distinct from PolygonError, which reports a
/// well-formed file whose vertices are not a simple polygon.
class PolygonParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A repeated closing vertex is dropped and reported through `warnings`.
PolygonFile parse_polygon_file(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string format_polygon_file(const PolygonFile& file);

/// Throws PolygonParseError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

/// Writes to a sibling temporary and renames it over `path`.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace lattice_pick
