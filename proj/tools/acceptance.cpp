// Prints one line per acceptance criterion; exit status 1 if any fails.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "copcalc/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& r : copcalc::run_all_criteria(seed)) {
    std::cout << copcalc::format_line(r) << std::endl;
    if (!r.pass()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
