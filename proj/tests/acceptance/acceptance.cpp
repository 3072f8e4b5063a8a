// Prints one line per acceptance criterion and exits nonzero if any fails.
#include <cstdlib>
#include <iostream>

#include "coarsek/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  const auto results = coarsek::run_acceptance(seed);
  bool ok = true;
  for (const auto& c : results) {
    std::cout << coarsek::format_criterion(c) << "\n";
    ok = ok && c.passed;
  }
  std::size_t passed = 0;
  for (const auto& c : results) passed += c.passed;
  std::cout << passed << "/" << results.size() << " criteria pass (seed " << seed << ")\n";
  return ok ? 0 : 1;
}
