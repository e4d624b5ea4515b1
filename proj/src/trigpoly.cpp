#include "trigzeros/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "trigzeros/error.hpp"

namespace trigzeros {

namespace {

constexpr double kPi = std::numbers::pi;

// Rotation steps between direct sin/cos re-anchors in series evaluation.
constexpr int kAnchorStride = 32;
constexpr int kCompensationThreshold = 1024;

struct Neumaier {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double result() const { return sum + carry; }
};

struct Plain {
  double sum = 0.0;
  void add(double v) { sum += v; }
  double result() const { return sum; }
};

struct ReducedAngle {
  double offset;  // y - k*pi
  bool negate;    // (-1)^{k(count-1)} == -1
};

ReducedAngle reduce_to_lattice(long count, double y) {
  const double k = std::nearbyint(y / kPi);
  const double d = y - k * kPi;
  const long kl = static_cast<long>(k);
  const bool odd = ((kl % 2) != 0) && (((count - 1) % 2) != 0);
  return {d, odd};
}

template <typename Acc>
ValueAndSlope sum_series(const PolySample& s, double x, bool want_slope) {
  Acc value;
  Acc slope;
  const double c1 = std::cos(x);
  const double s1 = std::sin(x);
  double c = 1.0;
  double sn = 0.0;
  for (int j = 0; j <= s.n; ++j) {
    if (j % kAnchorStride == 0) {
      const double arg = static_cast<double>(j) * x;
      c = std::cos(arg);
      sn = std::sin(arg);
    }
    const double aj = s.a[j];
    const double bj = s.b[j];
    value.add(aj * c + bj * sn);
    if (want_slope) slope.add(static_cast<double>(j) * (bj * c - aj * sn));
    const double cn = c * c1 - sn * s1;
    sn = sn * c1 + c * s1;
    c = cn;
  }
  return {value.result(), want_slope ? slope.result() : 0.0};
}

ValueAndSlope eval_dispatch(const PolySample& s, double x, bool want_slope) {
  if (s.n > kCompensationThreshold) return sum_series<Neumaier>(s, x, want_slope);
  return sum_series<Plain>(s, x, want_slope);
}

}  // namespace

double sine_ratio(long count, double y) {
  const double s = std::sin(y);
  if (std::abs(s) >= kRemovableWindow) {
    return std::sin(static_cast<double>(count) * y) / s;
  }
  const auto [d, negate] = reduce_to_lattice(count, y);
  const double c = static_cast<double>(count);
  double v;
  if (std::abs(c * d) < 1e-3) {
    v = c * (1.0 - (c * c - 1.0) * d * d / 6.0);
  } else {
    v = std::sin(c * d) / std::sin(d);
  }
  return negate ? -v : v;
}

double sine_ratio_derivative(long count, double y) {
  const double c = static_cast<double>(count);
  const auto [d, negate] = reduce_to_lattice(count, y);
  if (std::abs(c * d) < 1e-3) {
    const double c2 = c * c;
    const double v = c * (-(c2 - 1.0) * d / 3.0 +
                          (3.0 * c2 * c2 - 10.0 * c2 + 7.0) * d * d * d / 90.0);
    return negate ? -v : v;
  }
  const double s = std::sin(y);
  return (c * std::cos(c * y) * s - std::sin(c * y) * std::cos(y)) / (s * s);
}

double evaluate(const PolySample& sample, double x) {
  return eval_dispatch(sample, x, false).value;
}

double evaluate_derivative(const PolySample& sample, double x) {
  return eval_dispatch(sample, x, true).slope;
}

ValueAndSlope evaluate_with_derivative(const PolySample& sample, double x) {
  return eval_dispatch(sample, x, true);
}

double coefficient_l1(const PolySample& sample) {
  double total = 0.0;
  for (int j = 0; j <= sample.n; ++j) {
    total += std::abs(sample.a[j]) + std::abs(sample.b[j]);
  }
  return total;
}

double dirichlet_ratio(int m, int ell, double x) {
  return sine_ratio(m, 0.5 * static_cast<double>(ell) * x);
}

double dirichlet_ratio_derivative(int m, int ell, double x) {
  const double half_ell = 0.5 * static_cast<double>(ell);
  return half_ell * sine_ratio_derivative(m, half_ell * x);
}

double trig_sum_cos(int r, double p, double q, double x) {
  return sine_ratio(r, p * x) * std::cos(((r - 1) * p + q) * x);
}

double trig_sum_sin(int r, double p, double q, double x) {
  return sine_ratio(r, p * x) * std::sin(((r - 1) * p + q) * x);
}

double u_ell(int ell, double x) {
  return sine_ratio(ell, x) / static_cast<double>(ell);
}

double ReducedSample::evaluate(double x) const {
  double total = 0.0;
  for (int k = 0; k < ell; ++k) {
    const double arg = frequencies[k].times(x);
    total += a[k] * std::cos(arg);
    if (kind == PolyKind::Trig) total += b[k] * std::sin(arg);
  }
  return total;
}

ReducedSample reduce_periodic(const PolySample& sample) {
  if (!sample.model.is_periodic()) {
    throw ModelError("reduce_periodic needs an ell-periodic sample");
  }
  const int ell = sample.model.ell;
  const auto dec = decompose_degree(sample.n, ell);
  if (dec.r != 0) {
    throw ModelError("reduce_periodic needs r = 0 (n + 1 divisible by ell); got r=" +
                     std::to_string(dec.r));
  }
  ReducedSample red;
  red.ell = ell;
  red.m = dec.m;
  red.n = sample.n;
  red.kind = sample.model.kind;
  red.a.assign(sample.a.begin(), sample.a.begin() + ell);
  red.b.assign(sample.b.begin(), sample.b.begin() + ell);
  const long shift = static_cast<long>(dec.m - 1) * ell;
  for (int k = 0; k < ell; ++k) {
    red.frequencies.push_back(HalfInteger{2L * k + shift});
  }
  return red;
}

std::complex<double> AlgebraicFactorization::quotient(std::complex<double> z) const {
  // sum_{j<m} (z^ell)^j; avoids the 0/0 at ell-th roots of unity
  const std::complex<double> w = std::pow(z, ell);
  std::complex<double> acc = 0.0;
  for (int j = 0; j < m; ++j) acc = acc * w + 1.0;
  return acc;
}

std::complex<double> AlgebraicFactorization::base_polynomial(std::complex<double> z) const {
  return evaluate_algebraic(base, z);
}

std::complex<double> AlgebraicFactorization::product(std::complex<double> z) const {
  return quotient(z) * base_polynomial(z);
}

std::complex<double> evaluate_algebraic(std::span<const double> a,
                                        std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

AlgebraicFactorization factorize_algebraic(std::span<const double> a, int ell) {
  if (ell < 1) throw ModelError("ell must be >= 1");
  if (a.empty() || a.size() % static_cast<std::size_t>(ell) != 0) {
    throw ModelError("coefficient count " + std::to_string(a.size()) +
                     " is not a positive multiple of ell=" + std::to_string(ell));
  }
  for (std::size_t i = ell; i < a.size(); ++i) {
    if (a[i] != a[i - ell]) {
      throw ModelError("coefficients are not " + std::to_string(ell) +
                       "-periodic at index " + std::to_string(i));
    }
  }
  AlgebraicFactorization f;
  f.ell = ell;
  f.m = static_cast<int>(a.size()) / ell;
  f.base.assign(a.begin(), a.begin() + ell);
  const int order = ell * f.m;
  for (int j = 1; j < order; ++j) {
    if (j % f.m == 0) continue;
    const double theta = 2.0 * kPi * j / order;
    f.deterministic_roots.emplace_back(std::cos(theta), std::sin(theta));
  }
  return f;
}

void to_json(nlohmann::json& j, const AlgebraicFactorization& f) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& z : f.deterministic_roots) roots.push_back({z.real(), z.imag()});
  j = nlohmann::json{{"ell", f.ell},
                     {"m", f.m},
                     {"degree", f.degree()},
                     {"quotient_exponents", {f.ell * f.m, f.ell}},
                     {"base", f.base},
                     {"deterministic_roots", roots}};
}

}  // namespace trigzeros
