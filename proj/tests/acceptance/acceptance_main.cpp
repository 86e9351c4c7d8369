// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line each. Exit status is nonzero when any criterion fails.

#include <cstdlib>
#include <exception>
#include <iostream>

#include "thinlayer/cli/acceptance.hpp"

int main(int argc, char** argv) {
  thinlayer::cli::AcceptanceOptions options;
  options.sample_map = argc > 1 ? argv[1] : THINLAYER_DATA_DIR "/sample_thickness.csv";
  try {
    int failed = 0;
    const auto results = thinlayer::cli::run_acceptance(options);
    for (const auto& r : results) {
      std::cout << thinlayer::cli::summary_line(r) << "\n";
      failed += r.passed ? 0 : 1;
    }
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
  } catch (const std::exception& e) {
    std::cerr << "acceptance aborted: " << e.what() << "\n";
    return 2;
  }
}
