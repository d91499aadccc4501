#include "lattice_pick/certificate.hpp"

#include "mutate.hpp"

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

const VertexList kSquare = pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
const VertexList kPentagon = pts({{0, 0}, {4, 0}, {4, 3}, {2, 1}, {0, 3}});
const VertexList kUnit = pts({{0, 0}, {1, 0}, {0, 1}});

Certificate certify(const VertexList& v) {
  Polygon poly = validate_polygon(v);
  return make_certificate(poly, decompose(poly));
}

DecompositionTree* first_leaf(DecompositionTree& t, std::string& path) {
  if (t.kind == NodeKind::Leaf) return &t;
  path += ".0";
  return first_leaf(t.children[0], path);
}

}  // namespace

TEST(Certificate, UnitTriangleValid) {
  CheckReport r = check_certificate(certify(kUnit));
  EXPECT_TRUE(r.valid);
  EXPECT_TRUE(r.violations.empty());
  ASSERT_TRUE(r.root_counts);
  EXPECT_EQ(*r.root_counts, counts(0, 3, 1));
  EXPECT_EQ(*r.residual, 0);
}

TEST(Certificate, PentagonValid) {
  CheckReport r = check_certificate(certify(kPentagon));
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(*r.root_counts, counts(2, 14, 16));
  EXPECT_EQ(*r.residual, 0);
}

TEST(Certificate, TamperedWitnessGivesOneViolation) {
  Certificate cert = certify(kPentagon);
  std::string path = "root";
  DecompositionTree* leaf = first_leaf(cert.tree, path);
  leaf->witness.m11 = 2;
  leaf->witness.m12 = 0;
  leaf->witness.m21 = 0;
  leaf->witness.m22 = 1;
  ASSERT_EQ(leaf->witness.determinant(), 2);
  CheckReport r = check_certificate(cert);
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].tree_path, path);
  EXPECT_EQ(r.violations[0].rule, "leaf.witness");
}

TEST(Certificate, RoundTrip) {
  for (const auto& v : {kSquare, kPentagon, kUnit}) {
    Certificate cert = certify(v);
    const std::string text = serialize(cert);
    EXPECT_EQ(deserialize(text), cert);
    EXPECT_EQ(serialize(deserialize(text)), text);
  }
}

TEST(Certificate, CanonicalForm) {
  const std::string text = serialize(certify(kUnit));
  EXPECT_EQ(text,
            R"({"format_version":"1","polygon":[["0","0"],["1","0"],["0","1"]],)"
            R"("tree":{"kind":"leaf","polygon":[["0","0"],["1","0"],["0","1"]],)"
            R"("witness":{"m":[["1","0"],["0","1"]],"t":["0","0"]}}})");
}

TEST(Certificate, BigIntegersSurvive) {
  const Integer big = Integer(1) << 130;
  VertexList v{{big, big}, {big + 1, big}, {big, big + 1}};
  Certificate cert = certify(v);
  EXPECT_EQ(deserialize(serialize(cert)), cert);
  EXPECT_TRUE(check_certificate(cert).valid);
}

TEST(Certificate, TruncatedInputIsMalformed) {
  const std::string text = serialize(certify(kSquare));
  for (std::size_t cut : {std::size_t{0}, std::size_t{1}, text.size() / 2, text.size() - 1}) {
    EXPECT_THROW(deserialize(text.substr(0, cut)), MalformedCertificate) << cut;
  }
}

TEST(Certificate, UnknownVersionIsMalformed) {
  std::string text = serialize(certify(kUnit));
  text.replace(text.find("\"1\""), 3, "\"99\"");
  try {
    check_certificate(deserialize(text));
    FAIL();
  } catch (const MalformedCertificate& e) {
    EXPECT_NE(std::string(e.what()).find("format_version"), std::string::npos);
  }
}

TEST(Certificate, SchemaErrorsAreMalformed) {
  EXPECT_THROW(deserialize("[]"), MalformedCertificate);
  EXPECT_THROW(deserialize(R"({"format_version":"1","polygon":[],"tree":{"kind":"bogus","polygon":[]}})"),
               MalformedCertificate);
  EXPECT_THROW(deserialize(R"({"format_version":"1","polygon":[["a","0"]],"tree":{}})"),
               MalformedCertificate);
  // Split with one child.
  EXPECT_THROW(
      deserialize(R"({"format_version":"1","polygon":[["0","0"],["1","0"],["0","1"]],)"
                  R"("tree":{"kind":"split","path":[],"polygon":[["0","0"],["1","0"],["0","1"]],)"
                  R"("children":[{"kind":"leaf","polygon":[],"witness":{"m":[["1","0"],["0","1"]],"t":["0","0"]}}]}})"),
      MalformedCertificate);
}

TEST(Certificate, RandomMutationsRejected) {
  std::mt19937_64 rng(73);
  const std::vector<Certificate> base{certify(kSquare), certify(kPentagon),
                                      certify(pts({{0, 0}, {6, 0}, {6, 4}, {3, 1}, {1, 2}, {0, 5}}))};
  for (int i = 0; i < 300; ++i) {
    Certificate cert = base[i % base.size()];
    const std::string what = mutate::apply_random(cert, rng);
    bool rejected = false;
    try {
      rejected = !check_certificate(cert).valid;
    } catch (const MalformedCertificate&) {
      rejected = true;
    }
    EXPECT_TRUE(rejected) << "mutation " << i << ": " << what;
  }
}

TEST(Certificate, ViolationsSortedByPath) {
  Certificate cert = certify(kPentagon);
  std::vector<DecompositionTree*> nodes;
  mutate::collect(cert.tree, nodes);
  for (auto* n : nodes) {
    if (n->kind == NodeKind::Leaf) n->witness.translation.x += 1;
  }
  CheckReport r = check_certificate(cert);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.violations.size(), static_cast<std::size_t>(leaf_count(cert.tree)));
  EXPECT_TRUE(std::is_sorted(r.violations.begin(), r.violations.end(),
                             [](const Violation& a, const Violation& b) { return a.tree_path < b.tree_path; }));
}
