#include "lattice_pick/commands.hpp"

#include "lattice_pick/certificate.hpp"
#include "lattice_pick/decompose.hpp"
#include "lattice_pick/lattice_count.hpp"
#include "lattice_pick/polygon_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <sstream>

namespace lattice_pick::cli {

namespace {

struct Loaded {
  std::optional<Polygon> polygon;
  int exit_code = kOk;
};

Loaded load_polygon(const std::filesystem::path& path, std::ostream& err) {
  Loaded result;
  std::vector<std::string> warnings;
  PolygonFile file;
  try {
    file = parse_polygon_file(read_text_file(path), &warnings);
  } catch (const PolygonParseError& e) {
    err << "error: " << path.string() << ": " << e.what() << "\n";
    result.exit_code = kMalformedInput;
    return result;
  }
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  try {
    result.polygon = validate_polygon(std::move(file.vertices));
  } catch (const PolygonError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kDomainFailure;
  }
  return result;
}

std::optional<std::size_t> max_retries_from_env(std::ostream& err) {
  const char* raw = std::getenv(kMaxRetriesEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(raw, &pos);
    if (pos == std::string(raw).size()) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  err << "warning: ignoring non-numeric " << kMaxRetriesEnv << "=" << raw << "\n";
  return std::nullopt;
}

}  // namespace

int cmd_check(const std::filesystem::path& polygon_file, std::ostream& out, std::ostream& err) {
  Loaded loaded = load_polygon(polygon_file, err);
  if (!loaded.polygon) return loaded.exit_code;
  const Polygon& poly = *loaded.polygon;
  out << "vertices: " << poly.size() << "\n";
  out << "orientation: " << to_string(poly.orientation()) << "\n";
  out << "simple, " << (is_convex(poly) ? "convex" : "non-convex")
      << ", E=" << extreme_point_count(poly) << "\n";
  return kOk;
}

int cmd_pick(const std::filesystem::path& polygon_file, std::ostream& out, std::ostream& err) {
  Loaded loaded = load_polygon(polygon_file, err);
  if (!loaded.polygon) return loaded.exit_code;
  const PickReport report = verify_pick(*loaded.polygon);
  out << "I=" << report.counts.interior << " B=" << report.counts.boundary
      << " area=" << format_area(report.counts.area2) << " residual=" << report.residual << "\n";
  return report.residual.is_zero() ? kOk : kDomainFailure;
}

int cmd_decompose(const std::filesystem::path& polygon_file,
                  const std::optional<std::filesystem::path>& certificate_out, std::ostream& out,
                  std::ostream& err) {
  Loaded loaded = load_polygon(polygon_file, err);
  if (!loaded.polygon) return loaded.exit_code;
  DecomposeStats stats;
  Certificate cert;
  try {
    cert = make_certificate(*loaded.polygon, decompose(*loaded.polygon, &stats));
  } catch (const DecomposeError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  const std::string text = serialize(cert) + "\n";
  std::ostream& summary = certificate_out ? out : err;
  if (certificate_out) {
    write_text_file_atomic(*certificate_out, text);
  } else {
    out << text;
  }
  summary << "leaves: " << leaf_count(cert.tree) << "\n";
  summary << "depth: " << tree_depth(cert.tree) << "\n";
  if (stats.convex_fallbacks > 0) {
    err << "note: exhaustive chord scan used " << stats.convex_fallbacks << " time(s)\n";
  }
  return kOk;
}

int cmd_certify(const std::filesystem::path& certificate_file, std::ostream& out,
                std::ostream& err) {
  CheckReport report;
  try {
    report = check_certificate(deserialize(read_text_file(certificate_file)));
  } catch (const PolygonParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const MalformedCertificate& e) {
    err << "malformed certificate: " << e.what() << "\n";
    return kMalformedInput;
  }
  out << (report.valid ? "valid" : "invalid") << "\n";
  if (report.root_counts) {
    out << "I=" << report.root_counts->interior << " B=" << report.root_counts->boundary
        << " area=" << format_area(report.root_counts->area2) << "\n";
  }
  if (report.residual) out << "residual=" << *report.residual << "\n";
  for (const auto& v : report.violations) {
    out << v.tree_path << " " << v.rule << ": " << v.message << "\n";
  }
  return report.valid ? kOk : kDomainFailure;
}

int cmd_gen(GeneratorConfig config, const std::optional<std::filesystem::path>& polygon_out,
            std::ostream& out, std::ostream& err) {
  if (auto retries = max_retries_from_env(err)) config.max_retries = *retries;
  if (config.vertex_count < 3) {
    err << "error: need at least 3 vertices\n";
    return kMalformedInput;
  }
  try {
    const Polygon poly = generate_polygon(config);
    const std::string text = format_polygon_file({poly.vertices(), std::nullopt});
    if (polygon_out) {
      write_text_file_atomic(*polygon_out, text);
    } else {
      out << text;
    }
  } catch (const GenerationExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kGenerationExhausted;
  }
  return kOk;
}

int cmd_svg(const std::filesystem::path& polygon_file, const SvgOptions& options,
            const std::filesystem::path& svg_out, std::ostream& out, std::ostream& err) {
  Loaded loaded = load_polygon(polygon_file, err);
  if (!loaded.polygon) return loaded.exit_code;
  try {
    write_text_file_atomic(svg_out, render_svg(*loaded.polygon, options));
  } catch (const DecomposeError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  out << "wrote " << svg_out.string() << "\n";
  return kOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice polygon toolkit: Pick counts, decompositions, certificates"};
  app.require_subcommand(1);

  std::string polygon_path;
  std::string cert_path;
  std::string out_path;

  auto* check = app.add_subcommand("check", "validate a polygon file");
  check->add_option("file", polygon_path, "polygon JSON file")->required();

  auto* pick = app.add_subcommand("pick", "count I and B and compare with the area");
  pick->add_option("file", polygon_path, "polygon JSON file")->required();

  auto* dec = app.add_subcommand("decompose", "write a decomposition certificate");
  dec->add_option("file", polygon_path, "polygon JSON file")->required();
  dec->add_option("-o,--output", out_path, "certificate path (default: stdout)");

  auto* certify = app.add_subcommand("certify", "check a decomposition certificate");
  certify->add_option("certificate", cert_path, "certificate JSON file")->required();

  GeneratorConfig gen_config;
  auto* gen = app.add_subcommand("gen", "generate a random simple lattice polygon");
  gen->add_option("-n,--vertices", gen_config.vertex_count, "vertex count")->required();
  gen->add_option("-b,--bound", gen_config.coord_bound, "coordinates in [0, BOUND]")->required();
  gen->add_option("-s,--seed", gen_config.seed, "PRNG seed")->required();
  gen->add_option("-o,--output", out_path, "polygon path (default: stdout)");

  SvgOptions svg_options;
  auto* svg = app.add_subcommand("svg", "render a polygon as SVG");
  svg->add_option("file", polygon_path, "polygon JSON file")->required();
  svg->add_flag("--show-hull", svg_options.show_hull);
  svg->add_flag("--show-pockets", svg_options.show_pockets);
  svg->add_flag("--show-decomposition", svg_options.show_decomposition);
  svg->add_flag("--show-lattice", svg_options.show_lattice);
  svg->add_option("-o,--output", out_path, "SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    app.exit(e, cli_out, cli_err);
    err << cli_out.str() << cli_err.str();
    return kMalformedInput;
  }

  auto optional_path = [&]() -> std::optional<std::filesystem::path> {
    if (out_path.empty()) return std::nullopt;
    return std::filesystem::path(out_path);
  };

  if (*check) return cmd_check(polygon_path, out, err);
  if (*pick) return cmd_pick(polygon_path, out, err);
  if (*dec) return cmd_decompose(polygon_path, optional_path(), out, err);
  if (*certify) return cmd_certify(cert_path, out, err);
  if (*gen) return cmd_gen(gen_config, optional_path(), out, err);
  if (*svg) return cmd_svg(polygon_path, svg_options, out_path, out, err);
  return kMalformedInput;
}

}  // namespace lattice_pick::cli
