#pragma once

#include "lattice_pick/polygon.hpp"

#include <string>

namespace lattice_pick {

struct SvgOptions {
  bool show_hull = false;
  bool show_pockets = false;
  bool show_decomposition = false;
  bool show_lattice = false;
};

/// Deterministic SVG of a polygon with optional overlays. One SVG unit is one
/// lattice unit, with a 1-unit margin; y grows upward as in the plane.
/// Colours: interior lattice points green, boundary lattice points blue,
/// hull dashed grey, selected pocket filled orange, the other pockets dotted
/// orange, decomposition triangles thin grey.
std::string render_svg(const Polygon& poly, const SvgOptions& options);

}  // namespace lattice_pick
