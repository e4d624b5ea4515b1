#pragma once

#include <string>

#include "trigzeros/coeff_models.hpp"
#include "trigzeros/quadrature.hpp"

namespace trigzeros {

/// Tensor composite Gauss-Legendre grid for the double integrals. End panels
/// next to singular corners are graded geometrically.
struct ConstantGrid {
  int panels_per_axis = 64;
  int nodes_per_panel = 16;
  int grading_levels = 18;
  double grading_ratio = 0.25;
  Execution execution = Execution::Parallel;

  ConstantGrid doubled() const {
    ConstantGrid g = *this;
    g.panels_per_axis *= 2;
    return g;
  }
  /// e.g. "64x16g18r0.25"
  std::string key() const;
};

struct ConstantResult {
  double value = 0.0;
  /// |value - value on the doubled grid| plus a round-off floor.
  double abs_error_estimate = 0.0;
  ConstantGrid grid;
};

/// sqrt(1 + r(ell-r) sin^2 s / [(ell-r) sin^2 t + r sin^2(s+t)]^2).
double c_integrand(int ell, int r, double s, double t);
/// sqrt(r(ell-r)) sin s / [(ell-r) sin^2 t + r sin^2(s+t)].
double j_integrand(int ell, int r, double s, double t);
/// sin s / (sin^2(alpha) sin^2 t + cos^2(alpha) sin^2(s+t)).
double i_alpha_integrand(double alpha, double s, double t);
/// sqrt(1 + 3(1 - u^2(s)) / (1 + u(s) cos t)^2), u = u_ell.
double k_integrand(int ell, double s, double t);

/// (1/pi^2) * double integral of c_integrand over (0, pi)^2. Requires
/// ell >= 2 and 0 <= r < ell; r = 0 gives exactly 1.
ConstantResult compute_C(int ell, int r, const ConstantGrid& grid = {});
/// (1/pi^2) * double integral of j_integrand over (0, pi)^2; equals 1.
ConstantResult compute_J(int ell, int r, const ConstantGrid& grid = {});
/// Double integral of i_alpha_integrand over (0, pi)^2; equals
/// pi^2/(sin(alpha) cos(alpha)). Requires 0 < alpha < pi/2.
ConstantResult compute_I_alpha(double alpha, const ConstantGrid& grid = {});
/// (1/pi^2) * integral over t in (0, pi), s in (0, pi/2) of k_integrand.
ConstantResult compute_K(int ell, const ConstantGrid& grid = {});

double i_alpha_closed_form(double alpha);

/// Adaptive value of the integral over (0, pi) of dt / (1 - u cos t) next to
/// its closed form pi / sqrt(1 - u^2), for |u| < 1.
struct CompanionCheck {
  double quadrature = 0.0;
  double closed_form = 0.0;
};
CompanionCheck companion_identity(double u);

struct TheoryPrediction {
  double value = 0.0;
  std::string order_tag;  // "exact", "o(n)", "O(n^{2/3})", "O(n^{4/5})"
};

/// Leading-order mean number of zeros on (0, 2*pi). Periodic cosine models
/// with r != 0 are not covered and throw ModelError.
TheoryPrediction theoretical_mean(const CoefficientModel& model, int n,
                                  const ConstantGrid& grid = {});

}  // namespace trigzeros
