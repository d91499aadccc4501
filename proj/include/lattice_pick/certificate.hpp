#pragma once

#include "lattice_pick/decompose.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lattice_pick {

inline constexpr std::string_view kCertificateFormatVersion = "1";

/// Self-contained decomposition certificate.
struct Certificate {
  std::string format_version{kCertificateFormatVersion};
  VertexList root_polygon;
  DecompositionTree tree;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate make_certificate(const Polygon& poly, DecompositionTree tree);

class MalformedCertificate : public std::runtime_error {
 public:
  /// `where` is a byte offset for syntax errors or a JSON pointer for
  /// structural ones.
  MalformedCertificate(const std::string& message, std::string where)
      : std::runtime_error(message + (where.empty() ? "" : " (at " + where + ")")),
        where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Canonical JSON: compact, keys sorted, integers as decimal strings.
std::string serialize(const Certificate& cert);

/// Throws MalformedCertificate.
Certificate deserialize(std::string_view bytes);

struct Violation {
  /// "root", "root.0", "root.0.1", ...: child indices from the root.
  std::string tree_path;
  std::string rule;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckReport {
  bool valid = false;
  /// Sorted by tree_path.
  std::vector<Violation> violations;
  /// Counts recombined bottom-up from the leaves; empty if some node could not
  /// be counted.
  std::optional<PickCounts> root_counts;
  /// area2(root) - (2I + B - 2) with I, B taken from root_counts.
  std::optional<Integer> residual;
};

/// Re-verifies every node from scratch. Leaf counts follow from the witness, internal
/// counts are recombined with pick_union_counts. Throws MalformedCertificate
/// on structural defects (wrong child count, unknown version).
CheckReport check_certificate(const Certificate& cert);

}  // namespace lattice_pick
