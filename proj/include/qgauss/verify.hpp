#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qgauss {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int jobs = 1;
  std::size_t mc_samples = 5000;
};

// Named invariant suites: "oracle", "axioms", "semigroup", "matmodel", or "all".
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options = {});

}  // namespace qgauss
