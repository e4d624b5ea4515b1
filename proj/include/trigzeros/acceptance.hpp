#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace trigzeros {

struct AcceptanceOptions {
  bool quick = false;  // fewer Monte Carlo trials
  std::uint64_t seed = 20250917;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// Runs criteria 1..8 in order, reporting each through `on_result` as it ends.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace trigzeros
