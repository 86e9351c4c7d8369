#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "thinlayer/cli/config.hpp"
#include "thinlayer/cli/io.hpp"

namespace thinlayer::cli {

struct RunOptions {
  // Output directory; falls back to [output] dir, then the working
  // directory.
  std::optional<std::filesystem::path> out_dir;
  // Lattice cells per side; overrides [solver] grid.
  std::optional<int> grid;
};

struct CommandResult {
  Json report;
  // Human-readable stdout; the report JSON is printed when empty.
  std::string text;
  // 0 on success, 1 when validation reports a failing criterion.
  int exit_code = 0;
  std::vector<std::filesystem::path> files;
};

CommandResult cmd_winkler(const Config& config, const RunOptions& options);
CommandResult cmd_elliptic(const Config& config, const RunOptions& options);
CommandResult cmd_sensitivity(const Config& config, const RunOptions& options);
CommandResult cmd_optimize(const Config& config, const RunOptions& options);
CommandResult cmd_validate(const Config& config, const RunOptions& options);

// Exit codes of the executable.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailure = 1,
  kExitConfigError = 2,
  kExitSolverError = 3,
};

// Parses argv, runs the command, prints the report and maps errors onto
// exit codes. Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thinlayer::cli
