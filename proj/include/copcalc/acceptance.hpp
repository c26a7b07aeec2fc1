#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace copcalc {

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string name;
  bool ok = false;        // the mathematical check
  double seconds = 0.0;
  double budget = 0.0;    // runtime budget in seconds
  std::string detail;
  bool pass() const { return ok && seconds <= budget; }
};

/// Number of acceptance criteria.
inline constexpr int kCriterionCount = 13;

/// Runs one criterion (1-based id). Randomized criteria draw from seed.
CriterionResult run_criterion(int id, std::uint64_t seed = 0);

/// Id for a suite key such as "lambda" or a number "5".
std::optional<int> find_criterion(std::string_view key);
std::vector<std::string> criterion_keys();

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed = 0);

/// "PASS  3 symbol calculus (0.012 s / 1 s): detail"
std::string format_line(const CriterionResult& r);

}  // namespace copcalc
