#include "lattice_pick/lattice_count.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lattice_pick;

namespace {

VertexList pts(std::initializer_list<std::pair<long, long>> xs) {
  VertexList out;
  for (auto [x, y] : xs) out.emplace_back(Integer(x), Integer(y));
  return out;
}

PickCounts counts(long i, long b, long a2) { return {Integer(i), Integer(b), Integer(a2)}; }

struct Case {
  const char* name;
  VertexList vertices;
  PickCounts want;
};

// Expected values produced by the brute-force oracle and frozen here.
std::vector<Case> frozen_cases() {
  return {
      {"rectangle", pts({{0, 0}, {4, 0}, {4, 3}, {0, 3}}), counts(6, 14, 24)},
      {"right_triangle", pts({{0, 0}, {4, 0}, {0, 3}}), counts(3, 8, 12)},
      {"tri33", pts({{0, 0}, {3, 0}, {0, 3}}), counts(1, 9, 9)},
      {"unit_triangle", pts({{0, 0}, {1, 0}, {0, 1}}), counts(0, 3, 1)},
      {"unit_square", pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), counts(0, 4, 2)},
      {"pentagon", pts({{0, 0}, {4, 0}, {4, 3}, {2, 1}, {0, 3}}), counts(2, 14, 16)},
      {"pocket", pts({{4, 3}, {2, 1}, {0, 3}}), counts(1, 8, 8)},
      {"square2", pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}}), counts(1, 8, 8)},
      {"square2_half", pts({{0, 0}, {2, 0}, {2, 2}}), counts(0, 6, 4)},
      {"thin_triangle", pts({{0, 0}, {2, 0}, {0, 1}}), counts(0, 4, 2)},
      {"arrow", pts({{0, 0}, {4, 0}, {2, 2}, {0, 4}}), counts(3, 12, 16)},
      {"hexagon", pts({{0, 1}, {1, 0}, {2, 0}, {3, 1}, {2, 2}, {1, 2}}), counts(2, 6, 8)},
  };
}

std::vector<Polygon> random_simple(std::mt19937_64& rng, int count, int bound) {
  std::uniform_int_distribution<int> c(0, bound);
  std::vector<Polygon> out;
  while (static_cast<int>(out.size()) < count) {
    VertexList v;
    const int n = 3 + static_cast<int>(out.size()) % 6;
    for (int i = 0; i < n; ++i) v.emplace_back(Integer(c(rng)), Integer(c(rng)));
    if (is_simple(v)) out.push_back(validate_polygon(std::move(v)));
  }
  return out;
}

}  // namespace

TEST(LatticeCount, FrozenValues) {
  for (const auto& c : frozen_cases()) {
    Polygon poly = validate_polygon(c.vertices);
    EXPECT_EQ(count_lattice(poly, CountMethod::BruteForce), c.want) << c.name;
    EXPECT_EQ(count_lattice(poly, CountMethod::Scanline), c.want) << c.name;
    PickReport r = verify_pick(poly);
    EXPECT_EQ(r.residual, 0) << c.name;
    EXPECT_EQ(r.pick_area2, c.want.area2) << c.name;
  }
}

TEST(LatticeCount, MatchesOracle) {
  std::mt19937_64 rng(7);
  for (const Polygon& poly : random_simple(rng, 400, 9)) {
    const auto small = oracle::small(poly.vertices());
    const oracle::Counts want = oracle::count(small);
    ASSERT_EQ(interior_count(poly), want.interior);
    ASSERT_EQ(interior_count_scanline(poly), want.interior);
    ASSERT_EQ(boundary_count(poly), want.boundary);
    ASSERT_EQ(area2(poly), oracle::twice_area(small));
  }
}

TEST(LatticeCount, BoundaryGcdMatchesBruteForceOnWideRange) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-20, 20);
  int tested = 0;
  while (tested < 300) {
    VertexList v;
    for (int i = 0; i < 3; ++i) v.emplace_back(Integer(c(rng)), Integer(c(rng)));
    if (!is_simple(v)) continue;
    ++tested;
    Polygon poly = validate_polygon(v);
    std::int64_t brute = 0;
    const auto small = oracle::small(v);
    for (std::size_t i = 0; i < 3; ++i) {
      brute += oracle::lattice_points_on_segment(small[i], small[(i + 1) % 3]) - 1;
    }
    ASSERT_EQ(boundary_count(poly), brute);
  }
}

TEST(LatticeCount, PickHoldsOnRandomPolygons) {
  std::mt19937_64 rng(13);
  for (const Polygon& poly : random_simple(rng, 300, 15)) {
    EXPECT_EQ(verify_pick(poly, CountMethod::Scanline).residual, 0);
  }
}

TEST(LatticeCount, InvariantUnderLatticeSymmetries) {
  std::mt19937_64 rng(19);
  const oracle::Affine shear{1, 2, 0, 1, 5, -3};
  for (const Polygon& poly : random_simple(rng, 60, 8)) {
    const PickCounts base = count_lattice(poly, CountMethod::Scanline);
    auto transforms = oracle::square_symmetries();
    transforms.push_back(shear);
    transforms.push_back({1, 0, 0, 1, -1000000007, 99});
    for (const auto& m : transforms) {
      Polygon moved = validate_polygon(oracle::big(oracle::apply(m, oracle::small(poly.vertices()))));
      EXPECT_EQ(count_lattice(moved, CountMethod::Scanline), base);
    }
    VertexList rev(poly.vertices().rbegin(), poly.vertices().rend());
    EXPECT_EQ(count_lattice(validate_polygon(rev), CountMethod::Scanline), base);
    for (std::size_t k = 1; k < poly.size(); ++k) {
      EXPECT_EQ(count_lattice(validate_polygon(rotate_vertices(poly.vertices(), k)),
                              CountMethod::Scanline),
                base);
    }
  }
}

TEST(LatticeCount, LargeCoordinatesScanline) {
  const Integer big = Integer(1) << 90;
  VertexList v{{big, big}, {big + 300, big}, {big + 300, big + 200}, {big, big + 200}};
  Polygon poly = validate_polygon(v);
  EXPECT_EQ(count_lattice(poly, CountMethod::Scanline), counts(299 * 199, 1000, 120000));
}

TEST(PickArea, Formula) {
  EXPECT_EQ(pick_area2(6, 14), 24);
  EXPECT_EQ(pick_area2(0, 3), 1);
}

TEST(FirstInteriorPoint, LexSmallest) {
  auto tri33 = validate_polygon(pts({{0, 0}, {3, 0}, {0, 3}}));
  EXPECT_EQ(first_interior_point(tri33), LatticePoint(Integer(1), Integer(1)));
  auto unit = validate_polygon(pts({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_FALSE(first_interior_point(unit).has_value());
  auto big = validate_polygon(pts({{0, 0}, {4, 0}, {0, 3}}));
  EXPECT_EQ(first_interior_point(big), LatticePoint(Integer(1), Integer(1)));
}

TEST(FormatArea, HalfIntegers) {
  EXPECT_EQ(format_area(16), "8");
  EXPECT_EQ(format_area(17), "17/2");
  EXPECT_EQ(format_area(1), "1/2");
}
