#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace thinlayer::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  // Named measurements in report order.
  std::vector<std::pair<std::string, double>> measured;
  std::string target;
};

struct AcceptanceOptions {
  // Coarse lattice of the convergence-ratio check; the fine one is twice
  // as dense.
  int ratio_cells = 128;
  // Shipped sample thickness map (header y1,y2,H).
  std::filesystem::path sample_map;
};

// Loads the sample map first, so a corrupt map aborts before any criterion
// runs (IoError).
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// "PASS  6  chain property  ratio_orth=1.7e-04 ... [target]"
std::string summary_line(const CriterionResult& r);

}  // namespace thinlayer::cli
