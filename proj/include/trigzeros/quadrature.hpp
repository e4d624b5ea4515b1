#pragma once

#include <functional>
#include <vector>

namespace trigzeros {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached and thread safe.
const GaussRule& gauss_legendre(int points);

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
};

std::vector<Panel> uniform_panels(double lo, double hi, int count);

/// Uniform panels whose end panels are split geometrically `levels` times
/// by `ratio` toward the graded ends, for integrable endpoint singularities.
std::vector<Panel> graded_panels(double lo, double hi, int base_panels, int levels,
                                 double ratio, bool grade_lo, bool grade_hi);

/// Splits [lo, hi] into equal panels no wider than max_width.
std::vector<Panel> panels_with_max_width(double lo, double hi, double max_width);

/// Flattened composite rule: every (node, weight) pair over a panel list.
struct CompositeRule {
  std::vector<double> x;
  std::vector<double> w;
};
CompositeRule composite_rule(const std::vector<Panel>& panels, const GaussRule& rule);

enum class Execution { Serial, Parallel };

struct QuadratureSum {
  double value = 0.0;
  double abs_value = 0.0;  // sum of |w f|, for round-off estimates
};

/// Composite Gauss-Legendre sum of f over `panels`. Per-panel partial sums are
/// combined in panel order, so Serial and Parallel agree bit for bit.
QuadratureSum integrate_composite(const std::function<double(double)>& f,
                                  const std::vector<Panel>& panels, const GaussRule& rule,
                                  Execution exec = Execution::Serial);

struct AdaptiveResult {
  double value = 0.0;
  double abs_error = 0.0;
};

/// Adaptive Gauss-Kronrod (21-point) on [lo, hi].
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double lo,
                                  double hi, double epsabs, double epsrel);

struct PanelAdaptiveSum {
  double value = 0.0;
  double abs_value = 0.0;  // sum of |panel value|
  double abs_error = 0.0;  // sum of the per-panel error estimates
};

/// integrate_adaptive on every panel, combined in panel order.
PanelAdaptiveSum integrate_panels_adaptive(const std::function<double(double)>& f,
                                           const std::vector<Panel>& panels, double epsabs,
                                           double epsrel, Execution exec = Execution::Serial);

}  // namespace trigzeros
