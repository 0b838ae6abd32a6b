#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skewminor/scalar.hpp"

namespace skewminor::cli {

struct VerifyConfig {
  std::size_t max_n = 6;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  long entry_bound = 9;
  Ring ring = Ring::integers();
};

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  // First few failing instances, one line each.
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return checked == passed; }
};

/// Runs every identity suite over `trials` random matrices. Trial t uses a
/// mt19937_64 seeded with (seed, t) and a matrix of size 1 + t mod max_n, so
/// the report depends only on the configuration.
[[nodiscard]] std::vector<SuiteResult> run_verify(const VerifyConfig& config);

}  // namespace skewminor::cli
