#include "trigzeros/oracles.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "trigzeros/constants.hpp"
#include "trigzeros/error.hpp"
#include "trigzeros/rng.hpp"

namespace trigzeros {

namespace {
constexpr long kChunks = 256;
}

MonteCarloEstimate monte_carlo_box(const std::function<double(double, double)>& f,
                                   double s_hi, double t_hi, long samples,
                                   std::uint64_t seed) {
  if (samples < 2) throw ModelError("Monte Carlo needs at least two samples");
  std::vector<double> sum(kChunks, 0.0);
  std::vector<double> sum_sq(kChunks, 0.0);
#pragma omp parallel for schedule(static)
  for (long c = 0; c < kChunks; ++c) {
    const long begin = samples * c / kChunks;
    const long end = samples * (c + 1) / kChunks;
    SplitMix64 rng(trial_seed(seed, 0, static_cast<std::uint64_t>(c)));
    double s1 = 0.0;
    double s2 = 0.0;
    for (long i = begin; i < end; ++i) {
      const double s = s_hi * rng.uniform_open();
      const double t = t_hi * rng.uniform_open();
      const double v = f(s, t);
      s1 += v;
      s2 += v * v;
    }
    sum[c] = s1;
    sum_sq[c] = s2;
  }
  double s1 = 0.0;
  double s2 = 0.0;
  for (long c = 0; c < kChunks; ++c) {
    s1 += sum[c];
    s2 += sum_sq[c];
  }
  const double n = static_cast<double>(samples);
  const double mean = s1 / n;
  const double var = std::max(0.0, (s2 - n * mean * mean) / (n - 1.0));
  const double area = s_hi * t_hi;
  return {area * mean, area * std::sqrt(var / n), samples};
}

MonteCarloEstimate monte_carlo_C(int ell, int r, long samples, std::uint64_t seed) {
  constexpr double pi = std::numbers::pi;
  auto est = monte_carlo_box([=](double s, double t) { return c_integrand(ell, r, s, t); },
                             pi, pi, samples, seed);
  est.value /= pi * pi;
  est.standard_error /= pi * pi;
  return est;
}

long double reference_evaluate(const PolySample& sample, long double x) {
  long double sum = 0.0L;
  for (int j = 0; j <= sample.n; ++j) {
    const long double arg = static_cast<long double>(j) * x;
    sum += static_cast<long double>(sample.a[j]) * std::cos(arg);
    if (!sample.b.empty()) sum += static_cast<long double>(sample.b[j]) * std::sin(arg);
  }
  return sum;
}

}  // namespace trigzeros
