#pragma once

// The command-line surface, as plain functions returning an exit code so the
// tests can drive them without spawning processes.

#include "lattice_pick/generator.hpp"
#include "lattice_pick/svg.hpp"

#include <filesystem>
#include <optional>
#include <ostream>

namespace lattice_pick::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainFailure = 1,
  kMalformedInput = 2,
  kInternalError = 3,
  kGenerationExhausted = 4,
};

inline constexpr const char* kMaxRetriesEnv = "LATTICE_PICK_MAX_RETRIES";

int cmd_check(const std::filesystem::path& polygon_file, std::ostream& out, std::ostream& err);

int cmd_pick(const std::filesystem::path& polygon_file, std::ostream& out, std::ostream& err);

/// Without `certificate_out` the certificate goes to `out` and the summary to
/// `err`.
int cmd_decompose(const std::filesystem::path& polygon_file,
                  const std::optional<std::filesystem::path>& certificate_out, std::ostream& out,
                  std::ostream& err);

int cmd_certify(const std::filesystem::path& certificate_file, std::ostream& out,
                std::ostream& err);

/// `max_retries` comes from LATTICE_PICK_MAX_RETRIES when set.
int cmd_gen(GeneratorConfig config, const std::optional<std::filesystem::path>& polygon_out,
            std::ostream& out, std::ostream& err);

int cmd_svg(const std::filesystem::path& polygon_file, const SvgOptions& options,
            const std::filesystem::path& svg_out, std::ostream& out, std::ostream& err);

/// Full argument parsing and dispatch.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lattice_pick::cli
