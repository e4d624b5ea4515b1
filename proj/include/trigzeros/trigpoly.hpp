#pragma once

#include <complex>
#include <span>
#include <vector>

#include "json.hpp"
#include "trigzeros/coeff_models.hpp"

namespace trigzeros {

/// Exact rational p/2. Frequencies k + (m-1)*ell/2 are half-integral when
/// (m-1)*ell is odd; storing the doubled numerator keeps them exact.
struct HalfInteger {
  long twice = 0;
  double value() const { return 0.5 * static_cast<double>(twice); }
  /// (p/2) * x, rounded once.
  double times(double x) const { return 0.5 * (static_cast<double>(twice) * x); }
  friend bool operator==(HalfInteger, HalfInteger) = default;
};

/// Window on |sin(y)| below which ratios switch to their limit expansion.
inline constexpr double kRemovableWindow = 1e-8;

/// sin(count*y) / sin(y), continuous through y = k*pi (limit +-count).
double sine_ratio(long count, double y);

/// d/dy of sine_ratio(count, y); zero at the removable points.
double sine_ratio_derivative(long count, double y);

double evaluate(const PolySample& sample, double x);
double evaluate_derivative(const PolySample& sample, double x);

struct ValueAndSlope {
  double value = 0.0;
  double slope = 0.0;
};
ValueAndSlope evaluate_with_derivative(const PolySample& sample, double x);

/// Sum of |a_j| + |b_j|; bounds |T_n| everywhere.
double coefficient_l1(const PolySample& sample);

/// phi_m(x) = sin(m*ell*x/2) / sin(ell*x/2), with phi_m = +-m at x = 2k*pi/ell.
double dirichlet_ratio(int m, int ell, double x);
double dirichlet_ratio_derivative(int m, int ell, double x);

/// sum_{j=0}^{r-1} cos((2pj + q)x) = sin(rpx) cos(((r-1)p + q)x) / sin(px).
double trig_sum_cos(int r, double p, double q, double x);
/// sum_{j=0}^{r-1} sin((2pj + q)x) = sin(rpx) sin(((r-1)p + q)x) / sin(px).
double trig_sum_sin(int r, double p, double q, double x);

/// u_ell(x) = sin(ell*x) / (ell*sin(x)); tends to 1 at x -> 0 and
/// (-1)^(ell+1) at x -> pi.
double u_ell(int ell, double x);

/// The ell-term random factor T_n* (or V_n*) of an ell-periodic sample with
/// r = 0: T_n(x) = phi_m(x) * T_n*(x), frequencies k + (m-1)*ell/2.
struct ReducedSample {
  int ell = 1;
  int m = 1;
  int n = 0;
  std::vector<double> a;                // a_0..a_{ell-1}
  std::vector<double> b;                // b_0..b_{ell-1}
  std::vector<HalfInteger> frequencies; // k + (m-1)*ell/2
  PolyKind kind = PolyKind::Trig;

  double evaluate(double x) const;
};

ReducedSample reduce_periodic(const PolySample& sample);

/// P_n(z) = ((z^{ell*m} - 1)/(z^ell - 1)) * sum_{k<ell} a_k z^k.
struct AlgebraicFactorization {
  int ell = 1;
  int m = 1;
  std::vector<double> base;
  /// ell*m-th roots of unity that are not ell-th roots of unity, by angle.
  std::vector<std::complex<double>> deterministic_roots;

  int degree() const { return ell * m - 1; }
  std::complex<double> quotient(std::complex<double> z) const;
  std::complex<double> base_polynomial(std::complex<double> z) const;
  std::complex<double> product(std::complex<double> z) const;
};

/// Horner evaluation of sum_j a_j z^j.
std::complex<double> evaluate_algebraic(std::span<const double> a,
                                        std::complex<double> z);

AlgebraicFactorization factorize_algebraic(std::span<const double> a, int ell);

void to_json(nlohmann::json& j, const AlgebraicFactorization& f);

}  // namespace trigzeros
