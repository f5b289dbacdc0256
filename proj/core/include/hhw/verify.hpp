#pragma once

#include "hhw/hochschild.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hhw {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t size_cap = kDefaultSizeCap;
};

/// wreath, bruteforce, koszul, cherednik.
std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options = {});

} // namespace hhw
