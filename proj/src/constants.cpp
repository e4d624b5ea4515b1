#include "trigzeros/constants.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "trigzeros/constants_cache.hpp"
#include "trigzeros/error.hpp"
#include "trigzeros/trigpoly.hpp"

namespace trigzeros {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRoundoff = 64.0 * std::numeric_limits<double>::epsilon();

struct Corners {
  bool s_lo = false;
  bool s_hi = false;
  bool t_lo = false;
  bool t_hi = false;
  // Integrate over (s, w) with t = w - s. Valid for integrands pi-periodic in
  // t; moves a ridge along s + t = pi onto the grid line w = pi.
  bool shear = false;
};

struct TensorAverage {
  double mean = 0.0;      // sum w f / sum w
  double abs_mean = 0.0;  // sum w |f| / sum w
};

CompositeRule axis(double lo, double hi, const ConstantGrid& g, bool grade_lo,
                   bool grade_hi) {
  const auto panels = graded_panels(lo, hi, g.panels_per_axis, g.grading_levels,
                                    g.grading_ratio, grade_lo, grade_hi);
  return composite_rule(panels, gauss_legendre(g.nodes_per_panel));
}

// Weighted mean of f over the box. Row sums are formed in a fixed order and
// the weight total goes through the same operations, so f == 1 gives exactly 1.
TensorAverage tensor_average(const std::function<double(double, double)>& f, double s_hi,
                             double t_hi, const ConstantGrid& g, Corners c) {
  const auto S = axis(0.0, s_hi, g, c.s_lo, c.s_hi);
  const auto T = axis(0.0, t_hi, g, c.t_lo, c.t_hi);
  const long rows = static_cast<long>(S.x.size());
  std::vector<double> row_value(rows), row_abs(rows), row_weight(rows);
  auto row = [&](long i) {
    double v = 0.0, a = 0.0, w = 0.0;
    for (std::size_t j = 0; j < T.x.size(); ++j) {
      const double fx = c.shear ? f(S.x[i], T.x[j] - S.x[i]) : f(S.x[i], T.x[j]);
      v += T.w[j] * fx;
      a += T.w[j] * std::abs(fx);
      w += T.w[j] * 1.0;
    }
    row_value[i] = S.w[i] * v;
    row_abs[i] = S.w[i] * a;
    row_weight[i] = S.w[i] * w;
  };
  if (g.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < rows; ++i) row(i);
  } else {
    for (long i = 0; i < rows; ++i) row(i);
  }
  double v = 0.0, a = 0.0, w = 0.0;
  for (long i = 0; i < rows; ++i) {
    v += row_value[i];
    a += row_abs[i];
    w += row_weight[i];
  }
  return {v / w, a / w};
}

void check_grid(const ConstantGrid& g) {
  if (g.panels_per_axis < 1 || g.nodes_per_panel < 1 || g.grading_levels < 0) {
    throw ModelError("constant grid needs positive panels and nodes");
  }
}

// `scale` times the box mean, with the doubled grid supplying the error.
ConstantResult integrate_constant(const std::function<double(double, double)>& f,
                                  double s_hi, double t_hi, double scale,
                                  const ConstantGrid& g, Corners c) {
  check_grid(g);
  const auto base = tensor_average(f, s_hi, t_hi, g, c);
  const auto fine = tensor_average(f, s_hi, t_hi, g.doubled(), c);
  ConstantResult out;
  out.value = scale * base.mean;
  out.abs_error_estimate =
      scale * (std::abs(base.mean - fine.mean) + kRoundoff * base.abs_mean);
  out.grid = g;
  return out;
}

void check_pair(int ell, int r, bool allow_zero) {
  if (ell < 2 || r < (allow_zero ? 0 : 1) || r >= ell) {
    std::ostringstream msg;
    msg << "constant needs ell >= 2 and " << (allow_zero ? 0 : 1)
        << " <= r < ell, got ell = " << ell << ", r = " << r;
    throw ModelError(msg.str());
  }
}

constexpr Corners kAllCorners{true, true, true, true, false};

// Grid-aligned coordinates for the larger of the two denominator weights.
Corners square_corners(double weight_t, double weight_sum) {
  Corners c = kAllCorners;
  c.shear = weight_sum > weight_t;
  return c;
}

}  // namespace

std::string ConstantGrid::key() const {
  std::ostringstream os;
  os << panels_per_axis << 'x' << nodes_per_panel << 'g' << grading_levels << 'r'
     << grading_ratio;
  return os.str();
}

double c_integrand(int ell, int r, double s, double t) {
  if (r == 0) return 1.0;
  const double ss = std::sin(s);
  const double st = std::sin(t);
  const double sst = std::sin(s + t);
  const double den = (ell - r) * st * st + r * sst * sst;
  const double ratio = static_cast<double>(r) * (ell - r) * ss * ss / (den * den);
  return std::sqrt(1.0 + ratio);
}

double j_integrand(int ell, int r, double s, double t) {
  const double st = std::sin(t);
  const double sst = std::sin(s + t);
  const double den = (ell - r) * st * st + r * sst * sst;
  return std::sqrt(static_cast<double>(r) * (ell - r)) * std::sin(s) / den;
}

double i_alpha_integrand(double alpha, double s, double t) {
  const double sa = std::sin(alpha);
  const double ca = std::cos(alpha);
  const double st = std::sin(t);
  const double sst = std::sin(s + t);
  return std::sin(s) / (sa * sa * st * st + ca * ca * sst * sst);
}

double k_integrand(int ell, double s, double t) {
  const double u = u_ell(ell, s);
  const double one_minus = std::max(0.0, 1.0 - u * u);
  if (one_minus == 0.0) return 1.0;
  const double den = 1.0 + u * std::cos(t);
  return std::sqrt(1.0 + 3.0 * one_minus / (den * den));
}

ConstantResult compute_C(int ell, int r, const ConstantGrid& grid) {
  check_pair(ell, r, true);
  return integrate_constant([=](double s, double t) { return c_integrand(ell, r, s, t); },
                            kPi, kPi, 1.0, grid, square_corners(ell - r, r));
}

ConstantResult compute_J(int ell, int r, const ConstantGrid& grid) {
  check_pair(ell, r, false);
  return integrate_constant([=](double s, double t) { return j_integrand(ell, r, s, t); },
                            kPi, kPi, 1.0, grid, square_corners(ell - r, r));
}

ConstantResult compute_I_alpha(double alpha, const ConstantGrid& grid) {
  if (!(alpha > 0.0 && alpha < kPi / 2.0)) {
    throw ModelError("alpha must lie strictly between 0 and pi/2");
  }
  return integrate_constant(
      [=](double s, double t) { return i_alpha_integrand(alpha, s, t); }, kPi, kPi,
      kPi * kPi, grid,
      square_corners(std::pow(std::sin(alpha), 2), std::pow(std::cos(alpha), 2)));
}

ConstantResult compute_K(int ell, const ConstantGrid& grid) {
  if (ell < 1) throw ModelError("K needs ell >= 1");
  // The integrand peaks where u -> 1 and cos t -> -1, i.e. near s = 0, t = pi.
  return integrate_constant([=](double s, double t) { return k_integrand(ell, s, t); },
                            kPi / 2.0, kPi, 0.5, grid, {true, false, false, true, false});
}

double i_alpha_closed_form(double alpha) {
  return kPi * kPi / (std::sin(alpha) * std::cos(alpha));
}

CompanionCheck companion_identity(double u) {
  if (!(std::abs(u) < 1.0)) throw ModelError("companion identity needs |u| < 1");
  auto f = [u](double t) { return 1.0 / (1.0 - u * std::cos(t)); };
  // Split at pi/2 so the peak at t = 0 (or pi) sits at an interval end.
  const double q = integrate_adaptive(f, 0.0, kPi / 2.0, 0.0, 1e-12).value +
                   integrate_adaptive(f, kPi / 2.0, kPi, 0.0, 1e-12).value;
  return {q, kPi / std::sqrt(1.0 - u * u)};
}

TheoryPrediction theoretical_mean(const CoefficientModel& model, int n,
                                  const ConstantGrid& grid) {
  validate_model(model);
  if (n < 1) throw ModelError("degree n must be >= 1");
  const double nn = n;
  if (!model.is_periodic()) return {2.0 * nn / std::sqrt(3.0), "o(n)"};
  const auto d = decompose_degree(n, model.ell);
  const double l = model.ell;
  if (model.kind == PolyKind::Trig) {
    if (d.r == 0) return {nn + 1.0 - l + std::sqrt(nn * nn + (l * l - 1.0) / 3.0), "exact"};
    return {nn * cached_C(model.ell, d.r, grid).value, "O(n^{4/5})"};
  }
  if (d.r == 0) {
    if (model.ell == 1) return {2.0 * nn, "exact"};
    return {2.0 * nn, "O(n^{2/3})"};
  }
  throw ModelError("no theoretical mean for periodic cosine models with r != 0");
}

}  // namespace trigzeros
