// Acceptance run: one line per criterion, nonzero exit if any fails.

#include "frobcf/parallel.hpp"
#include "frobcf/repro.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  frobcf::ReproConfig config;
  config.workers = frobcf::default_workers();
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--workers") config.workers = std::max(1, std::atoi(argv[i + 1]));
  std::cout << "acceptance run with " << config.workers << " workers" << std::endl;
  const auto results = frobcf::repro_all(config);
  std::cout << frobcf::format_report(results);
  return frobcf::repro_exit_code(results);
}
