#pragma once

#include "lattice_pick/polygon.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace lattice_pick {

struct GeneratorConfig {
  std::size_t vertex_count = 3;
  /// Vertices are drawn from [0, coord_bound]^2.
  std::uint64_t coord_bound = 10;
  std::uint64_t seed = 0;
  std::size_t max_retries = 1000;
};

class GenerationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejection sampler: draw distinct lattice points, order them by angle around
/// their centroid, keep the first attempt that is a simple polygon. The
/// result is star-shaped around the centroid more often than a uniform
/// sample would be. Same config, same polygon.
Polygon generate_polygon(const GeneratorConfig& config);

}  // namespace lattice_pick
