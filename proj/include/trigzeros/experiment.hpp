#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trigzeros/coeff_models.hpp"
#include "trigzeros/zero_counting.hpp"

namespace trigzeros {

enum class ReportFormat { Csv, Json };

ReportFormat parse_report_format(const std::string& text);
std::string to_string(ReportFormat format);

struct ExperimentConfig {
  CoefficientModel model;
  std::vector<int> n_values;
  int trials = 100;
  std::uint64_t master_seed = 0;
  int grid_per_degree = 32;
  std::string output_path;  // empty means stdout
  ReportFormat format = ReportFormat::Csv;
};

/// Throws ModelError listing every violated invariant.
void validate_config(const ExperimentConfig& config);

struct ExperimentRow {
  int n = 0;
  int m = 0;
  int r = 0;
  double empirical_mean = 0.0;
  double stddev = 0.0;
  double standard_error = 0.0;
  std::optional<double> theory;
  std::string order_tag;
  /// (mean - theory)/stderr; 0 when both the gap and stderr vanish, empty
  /// when stderr is 0 and the gap is not, or there is no theory.
  std::optional<double> z_score;
  int unstable_trials = 0;
  bool failed = false;  // more than 1% unstable trials

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;
};

/// Share of unstable trials above which a row is marked failed.
inline constexpr double kUnstableLimit = 0.01;

/// Per n, counts the zeros of `trials` independently seeded samples
/// (seed = trial_seed(master_seed, n, trial)) and compares the mean with
/// theoretical_mean. Trials run in parallel; aggregation is in trial order.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// As above, executing trials in the given permutation of 0..trials-1.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                std::span<const long> execution_order);

/// Raw per-trial counts for one n (unstable trials hold -1).
std::vector<int> trial_counts(const CoefficientModel& model, int n, int trials,
                              std::uint64_t master_seed, int grid_per_degree);

}  // namespace trigzeros
