#include "lattice_pick/certificate.hpp"
#include "lattice_pick/commands.hpp"
#include "lattice_pick/generator.hpp"
#include "lattice_pick/polygon_io.hpp"
#include "lattice_pick/svg.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

using namespace lattice_pick;
namespace fs = std::filesystem;

namespace {

VertexList pts(std::initializer_list<std::pair<long, long>> xs) {
  VertexList out;
  for (auto [x, y] : xs) out.emplace_back(Integer(x), Integer(y));
  return out;
}

const fs::path kData = LATTICE_PICK_TEST_DATA;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lattice_pick_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    write_text_file_atomic(p, text);
    return p;
  }

  fs::path polygon(const std::string& name, const VertexList& v) {
    return write(name, format_polygon_file({v, std::nullopt}));
  }

  // Runs the installed binary; returns its exit status.
  int run_binary(const std::string& args) {
    const std::string cmd = std::string(LATTICE_PICK_CLI_BINARY) + " " + args + " >" +
                            (dir_ / "stdout").string() + " 2>" + (dir_ / "stderr").string();
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const VertexList kPentagon = pts({{0, 0}, {4, 0}, {4, 3}, {2, 1}, {0, 3}});
const VertexList kSquare = pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
const VertexList kBowtie = pts({{0, 0}, {2, 2}, {2, 0}, {0, 2}});

}  // namespace

TEST(PolygonIo, ParsesIntegersAndStrings) {
  PolygonFile f = parse_polygon_file(R"({"vertices": [[0, 0], ["4", 0], [4, "3"]], "name": "t"})");
  EXPECT_EQ(f.vertices, pts({{0, 0}, {4, 0}, {4, 3}}));
  EXPECT_EQ(f.name, "t");
}

TEST(PolygonIo, DropsClosingVertexWithWarning) {
  std::vector<std::string> warnings;
  PolygonFile f = parse_polygon_file(R"({"vertices": [[0,0],[1,0],[0,1],[0,0]]})", &warnings);
  EXPECT_EQ(f.vertices, pts({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(PolygonIo, Errors) {
  EXPECT_THROW(parse_polygon_file("{"), PolygonParseError);
  EXPECT_THROW(parse_polygon_file(R"({"points": []})"), PolygonParseError);
  EXPECT_THROW(parse_polygon_file(R"({"vertices": [[0]]})"), PolygonParseError);
  EXPECT_THROW(parse_polygon_file(R"({"vertices": [[0.5, 1]]})"), PolygonParseError);
  EXPECT_THROW(parse_polygon_file(R"({"vertices": [["x", 1]]})"), PolygonParseError);
}

TEST(PolygonIo, RoundTrip) {
  const Integer big = Integer(1) << 100;
  VertexList v{{big, Integer(-3)}, {Integer(0), Integer(0)}, {Integer(5), big}};
  EXPECT_EQ(parse_polygon_file(format_polygon_file({v, "x"})).vertices, v);
}

TEST(Generator, DeterministicAndSimple) {
  GeneratorConfig cfg{12, 50, 7, 1000};
  Polygon a = generate_polygon(cfg);
  Polygon b = generate_polygon(cfg);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 12u);
  for (const auto& p : a.vertices()) {
    EXPECT_GE(p.x, 0);
    EXPECT_LE(p.x, 50);
    EXPECT_GE(p.y, 0);
    EXPECT_LE(p.y, 50);
  }
  cfg.seed = 8;
  EXPECT_NE(generate_polygon(cfg), a);
}

TEST(Generator, ExhaustedWhenImpossible) {
  EXPECT_THROW(generate_polygon({3, 0, 1, 10}), GenerationExhausted);
  EXPECT_THROW(generate_polygon({10, 1, 1, 10}), GenerationExhausted);
}

TEST_F(CliTest, CheckReportsConvexity) {
  EXPECT_EQ(cli::cmd_check(polygon("p.json", kPentagon), out_, err_), cli::kOk);
  EXPECT_EQ(out_.str(), "vertices: 5\norientation: counterclockwise\nsimple, non-convex, E=4\n");
}

TEST_F(CliTest, CheckRejectsBowtie) {
  EXPECT_EQ(cli::cmd_check(polygon("b.json", kBowtie), out_, err_), cli::kDomainFailure);
  EXPECT_NE(err_.str().find("edges 0-1 and 2-3"), std::string::npos);
}

TEST_F(CliTest, MalformedInput) {
  EXPECT_EQ(cli::cmd_check(write("bad.json", "{\"vertices\": ["), out_, err_), cli::kMalformedInput);
  EXPECT_EQ(cli::cmd_pick(dir_ / "missing.json", out_, err_), cli::kMalformedInput);
}

TEST_F(CliTest, PickPrintsCounts) {
  EXPECT_EQ(cli::cmd_pick(polygon("p.json", kPentagon), out_, err_), cli::kOk);
  EXPECT_EQ(out_.str(), "I=2 B=14 area=8 residual=0\n");
  std::ostringstream out2;
  EXPECT_EQ(cli::cmd_pick(polygon("t.json", pts({{0, 0}, {1, 0}, {0, 1}})), out2, err_), cli::kOk);
  EXPECT_EQ(out2.str(), "I=0 B=3 area=1/2 residual=0\n");
}

TEST_F(CliTest, DecomposeThenCertify) {
  const fs::path cert = dir_ / "c.json";
  EXPECT_EQ(cli::cmd_decompose(polygon("s.json", kSquare), cert, out_, err_), cli::kOk);
  EXPECT_EQ(out_.str(), "leaves: 8\ndepth: 3\n");
  std::ostringstream out2;
  EXPECT_EQ(cli::cmd_certify(cert, out2, err_), cli::kOk);
  EXPECT_EQ(out2.str(), "valid\nI=1 B=8 area=4\nresidual=0\n");
}

TEST_F(CliTest, DecomposeToStdout) {
  EXPECT_EQ(cli::cmd_decompose(polygon("p.json", kPentagon), std::nullopt, out_, err_), cli::kOk);
  Certificate cert = deserialize(out_.str());
  EXPECT_EQ(cert.tree.kind, NodeKind::Pocket);
  EXPECT_NE(err_.str().find("leaves: "), std::string::npos);
}

TEST_F(CliTest, CertifyRejectsTampered) {
  Polygon poly = validate_polygon(kPentagon);
  Certificate cert = make_certificate(poly, decompose(poly));
  cert.tree.children[1].polygon[0].x += 1;
  EXPECT_EQ(cli::cmd_certify(write("c.json", serialize(cert)), out_, err_), cli::kDomainFailure);
  EXPECT_EQ(out_.str().substr(0, 8), "invalid\n");
  EXPECT_EQ(cli::cmd_certify(write("t.json", "{\"format_version\":"), out_, err_),
            cli::kMalformedInput);
}

TEST_F(CliTest, GenWritesSimplePolygon) {
  const fs::path p = dir_ / "g.json";
  EXPECT_EQ(cli::cmd_gen({12, 50, 7, 1000}, p, out_, err_), cli::kOk);
  std::ostringstream pick_out;
  EXPECT_EQ(cli::cmd_pick(p, pick_out, err_), cli::kOk);
  EXPECT_NE(pick_out.str().find("residual=0"), std::string::npos);
  EXPECT_EQ(parse_polygon_file(read_text_file(p)).vertices, generate_polygon({12, 50, 7, 1000}).vertices());
}

TEST_F(CliTest, GenExhausted) {
  EXPECT_EQ(cli::cmd_gen({3, 0, 1, 50}, std::nullopt, out_, err_), cli::kGenerationExhausted);
}

TEST_F(CliTest, BinaryExitCodes) {
  const fs::path pent = polygon("p.json", kPentagon);
  const fs::path bow = polygon("b.json", kBowtie);
  EXPECT_EQ(run_binary("check " + pent.string()), 0);
  EXPECT_EQ(run_binary("check " + bow.string()), 1);
  EXPECT_EQ(run_binary("check"), 2);
  EXPECT_EQ(run_binary("frobnicate"), 2);
  EXPECT_EQ(run_binary("pick " + pent.string()), 0);
  EXPECT_EQ(read_text_file(dir_ / "stdout"), "I=2 B=14 area=8 residual=0\n");
  const fs::path cert = dir_ / "cert.json";
  EXPECT_EQ(run_binary("decompose " + pent.string() + " -o " + cert.string()), 0);
  EXPECT_EQ(run_binary("certify " + cert.string()), 0);
  EXPECT_EQ(run_binary("gen -n 3 -b 0 -s 1"), 4);
  EXPECT_EQ(run_binary("gen -n 12 -b 50 -s 7 -o " + (dir_ / "g.json").string()), 0);
  EXPECT_EQ(run_binary("pick " + (dir_ / "g.json").string()), 0);
  EXPECT_EQ(run_binary("svg " + pent.string() + " --show-hull -o " + (dir_ / "x.svg").string()), 0);
  EXPECT_TRUE(fs::exists(dir_ / "x.svg"));
}

TEST_F(CliTest, RetriesFromEnvironment) {
  ::setenv(cli::kMaxRetriesEnv, "3", 1);
  EXPECT_EQ(cli::cmd_gen({10, 1, 1, 1000000}, std::nullopt, out_, err_), cli::kGenerationExhausted);
  ::unsetenv(cli::kMaxRetriesEnv);
}

struct SvgGolden {
  const char* file;
  VertexList vertices;
  SvgOptions options;
};

TEST(Svg, GoldenFiles) {
  const std::vector<SvgGolden> cases{
      {"pentagon_pockets.svg", kPentagon, {false, true, false, false}},
      {"pentagon_all.svg", kPentagon, {true, true, true, true}},
      {"square_decomposition.svg", kSquare, {false, false, true, true}},
  };
  for (const auto& c : cases) {
    const std::string got = render_svg(validate_polygon(c.vertices), c.options);
    EXPECT_EQ(got, read_text_file(kData / c.file)) << c.file;
  }
}

TEST(Svg, PocketFilledOrange) {
  const std::string svg = render_svg(validate_polygon(kPentagon), {false, true, false, false});
  EXPECT_NE(svg.find("orange"), std::string::npos);
  const std::string plain = render_svg(validate_polygon(kPentagon), {});
  EXPECT_EQ(plain.find("orange"), std::string::npos);
}
