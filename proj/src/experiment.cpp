#include "trigzeros/experiment.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "trigzeros/constants.hpp"
#include "trigzeros/error.hpp"
#include "trigzeros/rng.hpp"

namespace trigzeros {

namespace {

struct TrialOutcome {
  int count = 0;
  bool stable = false;
};

std::vector<TrialOutcome> run_trials(const CoefficientModel& model, int n, int trials,
                                     std::uint64_t master_seed, int grid_per_degree,
                                     std::span<const long> order) {
  std::vector<TrialOutcome> out(trials);
  CountOptions opts;
  opts.grid_per_degree = grid_per_degree;
  const long total = static_cast<long>(order.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < total; ++i) {
    const long t = order[i];
    const auto sample =
        sample_coefficients(model, n, trial_seed(master_seed, static_cast<std::uint64_t>(n),
                                                 static_cast<std::uint64_t>(t)));
    try {
      const auto rep = count_zeros(sample, opts);
      out[t] = {rep.count, rep.stable};
    } catch (const NumericalError&) {
      out[t] = {0, false};
    }
  }
  return out;
}

ExperimentRow aggregate(const CoefficientModel& model, int n,
                        const std::vector<TrialOutcome>& outcomes) {
  ExperimentRow row;
  row.n = n;
  if (model.is_periodic()) {
    const auto d = decompose_degree(n, model.ell);
    row.m = d.m;
    row.r = d.r;
  } else {
    row.m = n + 1;
    row.r = 0;
  }
  // Welford in trial order.
  long used = 0;
  double mean = 0.0;
  double m2 = 0.0;
  for (const auto& o : outcomes) {
    if (!o.stable) {
      ++row.unstable_trials;
      continue;
    }
    ++used;
    const double delta = o.count - mean;
    mean += delta / used;
    m2 += delta * (o.count - mean);
  }
  row.empirical_mean = used > 0 ? mean : 0.0;
  row.stddev = used > 1 ? std::sqrt(m2 / (used - 1)) : 0.0;
  row.standard_error = used > 0 ? row.stddev / std::sqrt(static_cast<double>(used)) : 0.0;
  row.failed = used == 0 || row.unstable_trials > kUnstableLimit * outcomes.size();

  try {
    const auto th = theoretical_mean(model, n);
    row.theory = th.value;
    row.order_tag = th.order_tag;
    const double gap = row.empirical_mean - th.value;
    if (row.standard_error > 0.0) {
      row.z_score = gap / row.standard_error;
    } else if (gap == 0.0) {
      row.z_score = 0.0;
    }
  } catch (const ModelError&) {
    row.order_tag = "none";
  }
  return row;
}

}  // namespace

ReportFormat parse_report_format(const std::string& text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  throw ModelError("unknown report format '" + text + "' (expected csv or json)");
}

std::string to_string(ReportFormat format) {
  return format == ReportFormat::Csv ? "csv" : "json";
}

void validate_config(const ExperimentConfig& config) {
  std::ostringstream problems;
  try {
    validate_model(config.model);
  } catch (const ModelError& e) {
    problems << e.what() << "; ";
  }
  if (config.trials < 1) problems << "trials must be >= 1; ";
  if (config.grid_per_degree < 8) problems << "grid_per_degree must be >= 8; ";
  if (config.n_values.empty()) problems << "n_values must be nonempty; ";
  for (int n : config.n_values) {
    try {
      if (config.model.is_periodic()) {
        decompose_degree(n, config.model.ell);
      } else if (n < 1) {
        throw ModelError("degree n must be >= 1");
      }
    } catch (const ModelError& e) {
      problems << "n = " << n << ": " << e.what() << "; ";
    }
  }
  auto text = problems.str();
  if (!text.empty()) {
    text.resize(text.size() - 2);
    throw ModelError("invalid experiment config: " + text);
  }
}

std::vector<int> trial_counts(const CoefficientModel& model, int n, int trials,
                              std::uint64_t master_seed, int grid_per_degree) {
  std::vector<long> order(trials);
  std::iota(order.begin(), order.end(), 0L);
  const auto outcomes = run_trials(model, n, trials, master_seed, grid_per_degree, order);
  std::vector<int> counts;
  counts.reserve(trials);
  for (const auto& o : outcomes) counts.push_back(o.stable ? o.count : -1);
  return counts;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  std::vector<long> order(config.trials > 0 ? config.trials : 0);
  std::iota(order.begin(), order.end(), 0L);
  return run_experiment(config, order);
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                std::span<const long> execution_order) {
  validate_config(config);
  std::vector<char> seen(config.trials, 0);
  bool permutation = static_cast<long>(execution_order.size()) == config.trials;
  for (long t : execution_order) {
    if (t < 0 || t >= config.trials || seen[t]) {
      permutation = false;
      break;
    }
    seen[t] = 1;
  }
  if (!permutation) throw ModelError("execution order must permute 0..trials-1");

  ExperimentResult result;
  result.config = config;
  for (int n : config.n_values) {
    const auto outcomes = run_trials(config.model, n, config.trials, config.master_seed,
                                     config.grid_per_degree, execution_order);
    result.rows.push_back(aggregate(config.model, n, outcomes));
  }
  return result;
}

}  // namespace trigzeros
