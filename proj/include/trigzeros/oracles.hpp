#pragma once

#include <cstdint>
#include <functional>

#include "trigzeros/coeff_models.hpp"

namespace trigzeros {

/// Plain Monte Carlo estimate of a box integral.
struct MonteCarloEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  long samples = 0;
};

/// Integral of f over (0, s_hi) x (0, t_hi) from `samples` uniform points.
/// Points are drawn in fixed chunks with their own seeds, so the estimate
/// does not depend on the thread count.
MonteCarloEstimate monte_carlo_box(const std::function<double(double, double)>& f,
                                   double s_hi, double t_hi, long samples,
                                   std::uint64_t seed);

/// (1/pi^2) * integral of the C integrand over (0, pi)^2 by Monte Carlo.
MonteCarloEstimate monte_carlo_C(int ell, int r, long samples, std::uint64_t seed);

/// T_n(x) with long double accumulation and one direct cos/sin per term.
long double reference_evaluate(const PolySample& sample, long double x);

}  // namespace trigzeros
