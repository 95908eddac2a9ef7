// Acceptance suite: runs every verification criterion and prints one line per
// check. Exits nonzero when any criterion fails.

#include <cstdlib>
#include <iostream>

#include "nlg/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  const auto results = nlg::run_paper_checks(seed);
  const bool ok = nlg::print_paper_checks(results, std::cout);
  return ok ? 0 : 1;
}
