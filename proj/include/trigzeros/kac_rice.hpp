#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "trigzeros/coeff_models.hpp"
#include "trigzeros/quadrature.hpp"

namespace trigzeros {

/// Covariance sums of a Gaussian basis at x: A = sum f_j^2, B = sum f_j f_j',
/// C = sum f_j'^2.
struct AbcTriple {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double x = 0.0;
  /// AC - B^2 as sum_{i<j} (f_i f_j' - f_j f_i')^2, free of cancellation where
  /// A is tiny. Filled for bases of at most kLagrangeLimit functions, else NaN.
  double lagrange = std::numeric_limits<double>::quiet_NaN();
  double gram() const { return a * c - b * b; }
};

inline constexpr int kLagrangeLimit = 64;

/// `count` frequencies (twice_start + t*twice_step)/2, t = 0..count-1, all
/// multiplying the same Gaussian coefficient. With sine, each group carries a
/// cosine function and a sine function.
struct FrequencyGroup {
  long twice_start = 0;
  long twice_step = 2;
  long count = 1;
};

struct KacRiceBasis {
  std::vector<FrequencyGroup> groups;
  bool with_sine = true;
};

/// Basis of the full degree-n ensemble: n+1 singleton groups for iid models,
/// ell groups {k, k+ell, ...} for periodic ones.
KacRiceBasis model_basis(const CoefficientModel& model, int n);

/// The ell single frequencies k + (m-1)*ell/2 of the reduced factor of a
/// periodic model with r = 0.
KacRiceBasis reduced_basis(const CoefficientModel& model, int n);

AbcTriple abc_direct(const KacRiceBasis& basis, double x);
AbcTriple abc_direct(const CoefficientModel& model, int n, double x);

/// The point num*pi/den, held exactly.
struct Anchor {
  long num = 0;
  long den = 1;
  double value() const;
};

/// abc_direct at x = anchor + h. Phases at the anchor are formed from the exact
/// rational angle, so basis values stay accurate relative to h when they
/// vanish at the anchor.
AbcTriple abc_anchored(const KacRiceBasis& basis, Anchor anchor, double h);

/// sqrt(AC - B^2)/A. A slightly negative Gram determinant (>= -1e-12*AC) is
/// clamped to 0; anything worse, or A <= 0, throws NumericalError. Uses the
/// Lagrange form of AC - B^2 when present.
double kac_rice_integrand(const AbcTriple& abc);

/// Main terms of the closed forms for A, B^2 and C of a periodic trig model
/// with remainder r != 0, in terms of phi_m. A is exact; B^2 and C keep the
/// leading terms, and inside the window x < 2m^{-1/5}/ell their relative
/// error is O(1/m).
struct ClosedFormAbc {
  double a = 0.0;
  double b_squared = 0.0;
  double c = 0.0;
};
ClosedFormAbc closed_form_abc(int ell, int r, int m, double x);

enum class WindowPolicy { Integrate, Exclude };

struct QuadConfig {
  int panels_per_degree = 4;  // panel width pi/(panels_per_degree*n)
  int nodes_per_panel = 16;
  /// Window exponent a; unset means 1/5 for r != 0 and 1/3 for cosine r = 0.
  std::optional<double> exclusion_exponent;
  WindowPolicy windows = WindowPolicy::Integrate;
  Execution execution = Execution::Parallel;
};

struct WindowSpan {
  double lo = 0.0;
  double hi = 0.0;
  Anchor center;
};

struct KacRiceResult {
  double expected_zeros = 0.0;
  double abs_error_estimate = 0.0;
  std::vector<WindowSpan> excluded_windows;
  int panels_used = 0;
  double deterministic_zeros = 0.0;
  double window_mass = 0.0;        // expected zeros inside the windows
  double window_mass_bound = 0.0;  // total window width * 2n/pi
  std::string route;
};

/// Expected number of zeros on (0, 2*pi) by the Kac-Rice integral.
///
/// Periodic models with r = 0 count the n+1-ell zeros of phi_m and integrate
/// the reduced factor only. Periodic models otherwise get windows around the
/// lattice points 2k*pi/ell (half-width (2/ell)*m^{-a}); cosine r = 0 models
/// get windows around 0, pi and 2*pi (half-width n^{-a}). Windows are
/// integrated and reported under WindowPolicy::Integrate and left out, with
/// their bound added to the error estimate, under WindowPolicy::Exclude.
KacRiceResult expected_zeros_quadrature(const CoefficientModel& model, int n,
                                        const QuadConfig& quad = {});

/// (1/pi) * integral of the Kac-Rice integrand of `basis` over [lo, hi].
struct DensityIntegral {
  double value = 0.0;
  double abs_value = 0.0;
  int panels = 0;
};
DensityIntegral integrate_density(const KacRiceBasis& basis, double lo, double hi,
                                  double max_panel_width, int nodes_per_panel,
                                  Execution execution = Execution::Parallel);

/// n+1-ell + sqrt(n^2 + (ell^2-1)/3). Requires ell | n+1 and m >= 2.
double expected_zeros_exact_r0(int n, int ell);

/// sqrt(1 + r(ell-r) sin^2 x / [(ell-r) sin^2(mx) + r sin^2((m+1)x)]^2).
double limit_integrand_g(int ell, int r, int m, double x);

/// (m/pi) * integral of g over [pi/m, pi - pi/m].
double limit_integral_g(int ell, int r, int m);

enum class Sign { Plus, Minus };

/// sqrt(1 - u^2) / (1 +- u cos(nx)) with u = u_ell(x).
double limit_integrand_fpm(int ell, int n, double x, Sign sign);

struct CosineLimitIntegrals {
  double plus = 0.0;   // (1/pi) * integral of f^+ over (0, pi/2)
  double minus = 0.0;  // (1/pi) * integral of f^- over (pi/(2n), pi/2)
};
CosineLimitIntegrals cosine_limit_integrals(int ell, int n);

/// (n+1-ell) + n(I^+ + I^-) when n-ell is even, (n+1-ell) + 2n I^+ otherwise.
double cosine_limit_expected(int ell, int n);

}  // namespace trigzeros
