#include "trigzeros/kac_rice.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "trigzeros/error.hpp"
#include "trigzeros/trigpoly.hpp"

namespace trigzeros {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kAnchorStride = 32;
constexpr double kGramTolerance = 1e-12;
constexpr double kRoundoff = 64.0 * std::numeric_limits<double>::epsilon();

std::complex<double> unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

double half_angle(long twice, double x) { return 0.5 * (static_cast<double>(twice) * x); }

// exp(i*pi*num/den) with exact values at multiples of pi/2.
std::complex<double> unit_pi_fraction(long num, long den) {
  long k = num % (2 * den);
  if (k < 0) k += 2 * den;
  const long quadrant = (2 * k) / den;
  const long rest = 2 * k - quadrant * den;
  double c = 1.0;
  double s = 0.0;
  if (rest != 0) {
    const double th = kPi * static_cast<double>(rest) / (2.0 * static_cast<double>(den));
    c = std::cos(th);
    s = std::sin(th);
  }
  switch (quadrant) {
    case 1: return {-s, c};
    case 2: return {-c, -s};
    case 3: return {s, -c};
    default: return {c, s};
  }
}

// exp(i * (twice/2) * (anchor + h))
std::complex<double> anchored_phase(long twice, Anchor a, double h) {
  const auto base = a.num == 0 ? std::complex<double>{1.0, 0.0}
                               : unit_pi_fraction(twice * a.num, 2 * a.den);
  return base * unit(half_angle(twice, h));
}

std::vector<WindowSpan> merge_windows(std::vector<WindowSpan> w) {
  std::sort(w.begin(), w.end(), [](auto& p, auto& q) { return p.lo < q.lo; });
  std::vector<WindowSpan> out;
  for (const auto& s : w) {
    if (!out.empty() && s.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, s.hi);
    } else {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<WindowSpan> windows_around(const std::vector<Anchor>& centers, double half) {
  std::vector<WindowSpan> w;
  for (const auto& a : centers) {
    const double c = a.value();
    const double lo = std::max(0.0, c - half);
    const double hi = std::min(2.0 * kPi, c + half);
    if (hi > lo) w.push_back({lo, hi, a});
  }
  return merge_windows(std::move(w));
}

// Merged windows keep one anchor; each panel is re-anchored at the nearest one.
Anchor nearest_anchor(const std::vector<Anchor>& centers, double x) {
  Anchor best = centers.front();
  for (const auto& a : centers) {
    if (std::abs(a.value() - x) < std::abs(best.value() - x)) best = a;
  }
  return best;
}

std::vector<WindowSpan> complement(const std::vector<WindowSpan>& windows) {
  std::vector<WindowSpan> core;
  double cursor = 0.0;
  for (const auto& w : windows) {
    if (w.lo > cursor) core.push_back({cursor, w.lo, {}});
    cursor = std::max(cursor, w.hi);
  }
  if (cursor < 2.0 * kPi) core.push_back({cursor, 2.0 * kPi, {}});
  return core;
}

struct SpanIntegral {
  double value = 0.0;
  double abs_value = 0.0;
  double adaptive_error = 0.0;
  int panels = 0;
};

// Window panels hold spikes of width ~1/n^2 next to the lattice points, so
// they get adaptive Gauss-Kronrod instead of the fixed rule.
constexpr double kWindowEpsAbs = 1e-11;
constexpr double kWindowEpsRel = 1e-10;

SpanIntegral integrate_spans(const KacRiceBasis& basis, const std::vector<WindowSpan>& spans,
                             double width, int nodes, Execution exec, bool adaptive,
                             const std::vector<Anchor>& centers = {}) {
  SpanIntegral out;
  for (const auto& s : spans) {
    if (!adaptive) {
      const auto d = integrate_density(basis, s.lo, s.hi, width, nodes, exec);
      out.value += d.value;
      out.abs_value += d.abs_value;
      out.panels += d.panels;
      continue;
    }
    // Anchors are panel ends, so no node sits where every basis value vanishes.
    std::vector<double> cuts{s.lo};
    for (const auto& a : centers) {
      const double c = a.value();
      if (c > s.lo && c < s.hi) cuts.push_back(c);
    }
    cuts.push_back(s.hi);
    std::sort(cuts.begin(), cuts.end());
    std::vector<Panel> panels;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const auto piece = panels_with_max_width(cuts[k], cuts[k + 1], width);
      panels.insert(panels.end(), piece.begin(), piece.end());
    }
    // Group consecutive panels by anchor and integrate each group in h = x - c.
    std::size_t i = 0;
    while (i < panels.size()) {
      const Anchor a = nearest_anchor(centers, 0.5 * (panels[i].lo + panels[i].hi));
      const double c = a.value();
      std::vector<Panel> local;
      for (; i < panels.size(); ++i) {
        const Anchor b = nearest_anchor(centers, 0.5 * (panels[i].lo + panels[i].hi));
        if (b.num * a.den != a.num * b.den) break;
        local.push_back({panels[i].lo - c, panels[i].hi - c});
      }
      const auto sum = integrate_panels_adaptive(
          [&](double h) { return kac_rice_integrand(abc_anchored(basis, a, h)); }, local,
          kWindowEpsAbs, kWindowEpsRel, exec);
      out.value += sum.value / kPi;
      out.abs_value += sum.abs_value / kPi;
      out.adaptive_error += sum.abs_error / kPi;
      out.panels += static_cast<int>(local.size());
    }
  }
  return out;
}

}  // namespace

KacRiceBasis model_basis(const CoefficientModel& model, int n) {
  validate_model(model);
  if (n < 1) throw ModelError("degree n must be >= 1");
  KacRiceBasis basis;
  basis.with_sine = model.has_sine();
  if (!model.is_periodic()) {
    basis.groups.reserve(n + 1);
    for (int j = 0; j <= n; ++j) basis.groups.push_back({2L * j, 2, 1});
    return basis;
  }
  decompose_degree(n, model.ell);
  for (int k = 0; k < model.ell && k <= n; ++k) {
    basis.groups.push_back({2L * k, 2L * model.ell, (n - k) / model.ell + 1});
  }
  return basis;
}

KacRiceBasis reduced_basis(const CoefficientModel& model, int n) {
  validate_model(model);
  if (!model.is_periodic()) throw ModelError("reduced basis needs a periodic model");
  const auto d = decompose_degree(n, model.ell);
  if (d.r != 0) throw ModelError("reduced basis needs (n+1) divisible by ell");
  KacRiceBasis basis;
  basis.with_sine = model.has_sine();
  for (int k = 0; k < model.ell; ++k) {
    basis.groups.push_back({2L * k + static_cast<long>(d.m - 1) * model.ell, 2, 1});
  }
  return basis;
}

double Anchor::value() const { return kPi * static_cast<double>(num) / static_cast<double>(den); }

AbcTriple abc_direct(const KacRiceBasis& basis, double x) { return abc_anchored(basis, {0, 1}, x); }

AbcTriple abc_anchored(const KacRiceBasis& basis, Anchor anchor, double h) {
  AbcTriple t;
  t.x = anchor.value() + h;
  const std::size_t functions = basis.groups.size() * (basis.with_sine ? 2 : 1);
  const bool small = functions <= static_cast<std::size_t>(kLagrangeLimit);
  double f[kLagrangeLimit];
  double df[kLagrangeLimit];
  std::size_t used = 0;
  for (const auto& g : basis.groups) {
    std::complex<double> s{0.0, 0.0};
    std::complex<double> d{0.0, 0.0};
    std::complex<double> z = anchored_phase(g.twice_start, anchor, h);
    const std::complex<double> w = anchored_phase(g.twice_step, anchor, h);
    for (long i = 0; i < g.count; ++i) {
      const long twice = g.twice_start + i * g.twice_step;
      if (i > 0 && i % kAnchorStride == 0) z = anchored_phase(twice, anchor, h);
      s += z;
      d += (0.5 * static_cast<double>(twice)) * z;
      z *= w;
    }
    // cos part: f = Re s, f' = -Im d; sin part: g = Im s, g' = Re d.
    t.a += s.real() * s.real();
    t.b -= s.real() * d.imag();
    t.c += d.imag() * d.imag();
    if (small) {
      f[used] = s.real();
      df[used++] = -d.imag();
    }
    if (basis.with_sine) {
      t.a += s.imag() * s.imag();
      t.b += s.imag() * d.real();
      t.c += d.real() * d.real();
      if (small) {
        f[used] = s.imag();
        df[used++] = d.real();
      }
    }
  }
  if (small) {
    double sum = 0.0;
    for (std::size_t i = 0; i < used; ++i) {
      for (std::size_t j = i + 1; j < used; ++j) {
        const double w = f[i] * df[j] - f[j] * df[i];
        sum += w * w;
      }
    }
    t.lagrange = sum;
  }
  return t;
}

AbcTriple abc_direct(const CoefficientModel& model, int n, double x) {
  return abc_direct(model_basis(model, n), x);
}

double kac_rice_integrand(const AbcTriple& abc) {
  if (!(abc.a > 0.0)) {
    std::ostringstream msg;
    msg << "Kac-Rice variance A = " << abc.a << " is not positive at x = " << abc.x;
    throw NumericalError(msg.str());
  }
  double gram = abc.gram();
  if (gram < 0.0) {
    if (gram < -kGramTolerance * abc.a * abc.c) {
      std::ostringstream msg;
      msg << "negative Gram determinant " << gram << " at x = " << abc.x;
      throw NumericalError(msg.str());
    }
    gram = 0.0;
  }
  if (!std::isnan(abc.lagrange)) gram = abc.lagrange;
  return std::sqrt(gram) / abc.a;
}

ClosedFormAbc closed_form_abc(int ell, int r, int m, double x) {
  if (ell < 2 || r < 1 || r >= ell || m < 1) {
    throw ModelError("closed forms need ell >= 2, 1 <= r < ell, m >= 1");
  }
  const double phi = dirichlet_ratio(m, ell, x);
  const double dphi = dirichlet_ratio_derivative(m, ell, x);
  const double L = ell;
  const double R = r;
  const double M = m;
  ClosedFormAbc out;
  out.a = L * phi * phi + R + 2.0 * R * phi * std::cos((M + 1.0) * L * x / 2.0);
  const double s = std::sin(L * x / 2.0);
  const double c2 = std::cos((2.0 * M + 1.0) * L * x / 2.0);
  out.b_squared = L * L * phi * phi * dphi * dphi +
                  R * R * M * M * L * L * c2 * c2 / (4.0 * s * s) +
                  R * M * L * L * phi * dphi * c2 / s;
  out.c = M * M * L * L * out.a / 4.0 + R * M * M * L * L / 4.0 -
          R * M * L * dphi * std::sin((M + 1.0) * L * x / 2.0) + L * dphi * dphi;
  return out;
}

DensityIntegral integrate_density(const KacRiceBasis& basis, double lo, double hi,
                                  double max_panel_width, int nodes_per_panel,
                                  Execution execution) {
  DensityIntegral out;
  const auto panels = panels_with_max_width(lo, hi, max_panel_width);
  if (panels.empty()) return out;
  const auto& rule = gauss_legendre(nodes_per_panel);
  const auto sum = integrate_composite(
      [&](double x) { return kac_rice_integrand(abc_direct(basis, x)); }, panels, rule,
      execution);
  out.value = sum.value / kPi;
  out.abs_value = sum.abs_value / kPi;
  out.panels = static_cast<int>(panels.size());
  return out;
}

KacRiceResult expected_zeros_quadrature(const CoefficientModel& model, int n,
                                        const QuadConfig& quad) {
  validate_model(model);
  if (n < 1) throw ModelError("degree n must be >= 1");
  if (quad.panels_per_degree < 1 || quad.nodes_per_panel < 1) {
    throw ModelError("quadrature needs positive panels per degree and nodes per panel");
  }
  if (quad.exclusion_exponent && !(*quad.exclusion_exponent > 0.0)) {
    throw ModelError("exclusion exponent must be positive");
  }

  KacRiceResult res;
  KacRiceBasis basis;
  std::vector<WindowSpan> windows;
  std::vector<Anchor> centers;

  if (!model.is_periodic()) {
    basis = model_basis(model, n);
    res.route = "full";
  } else {
    const auto d = decompose_degree(n, model.ell);
    if (d.r == 0) {
      res.deterministic_zeros = n + 1 - model.ell;
      if (model.ell == 1 && model.kind == PolyKind::Cosine) {
        // V_n = a_0 * phi_m(x) * cos(nx/2): n more zeros in every realization.
        res.expected_zeros = 2.0 * n;
        res.route = "deterministic";
        return res;
      }
      basis = reduced_basis(model, n);
      res.route = "factorized";
      if (model.kind == PolyKind::Cosine) {
        const double a = quad.exclusion_exponent.value_or(1.0 / 3.0);
        centers = {{0, 1}, {1, 1}, {2, 1}};
        windows = windows_around(centers, std::pow(n, -a));
      }
    } else {
      basis = model_basis(model, n);
      res.route = "full";
      const double a = quad.exclusion_exponent.value_or(1.0 / 5.0);
      for (int k = 0; k <= model.ell; ++k) centers.push_back({2L * k, model.ell});
      windows = windows_around(centers, (2.0 / model.ell) * std::pow(d.m, -a));
    }
  }

  const auto core = complement(windows);
  const double width = kPi / (static_cast<double>(quad.panels_per_degree) * n);
  auto run = [&](double w) {
    const auto c = integrate_spans(basis, core, w, quad.nodes_per_panel, quad.execution, false);
    const auto x =
        integrate_spans(basis, windows, w, quad.nodes_per_panel, quad.execution, true, centers);
    return std::pair{c, x};
  };
  const auto [core_fine, win_fine] = run(width);
  const auto [core_coarse, win_coarse] = run(2.0 * width);

  double window_width = 0.0;
  for (const auto& w : windows) window_width += w.hi - w.lo;
  res.excluded_windows = windows;
  res.window_mass = win_fine.value;
  res.window_mass_bound = window_width * 2.0 * n / kPi;
  res.panels_used = core_fine.panels + win_fine.panels;

  const bool include = quad.windows == WindowPolicy::Integrate;
  const double fine = core_fine.value + (include ? win_fine.value : 0.0);
  const double coarse = core_coarse.value + (include ? win_coarse.value : 0.0);
  const double abs_sum = core_fine.abs_value + (include ? win_fine.abs_value : 0.0);
  res.expected_zeros = res.deterministic_zeros + fine;
  res.abs_error_estimate = std::abs(fine - coarse) +
                           kRoundoff * (abs_sum + res.deterministic_zeros) +
                           (include ? win_fine.adaptive_error : 0.0);
  if (!include) res.abs_error_estimate += res.window_mass_bound;

  if (res.expected_zeros > 2.0 * n + 0.5) {
    std::ostringstream msg;
    msg << "Kac-Rice total " << res.expected_zeros << " exceeds 2n + 0.5 for n = " << n;
    throw NumericalError(msg.str());
  }
  return res;
}

double expected_zeros_exact_r0(int n, int ell) {
  const auto d = decompose_degree(n, ell);
  if (d.r != 0) throw ModelError("exact formula needs (n+1) divisible by ell");
  if (d.m < 2) throw ModelError("exact formula needs m >= 2");
  const double nn = n;
  const double l = ell;
  return nn + 1.0 - l + std::sqrt(nn * nn + (l * l - 1.0) / 3.0);
}

double limit_integrand_g(int ell, int r, int m, double x) {
  const double sx = std::sin(x);
  const double sm = std::sin(m * x);
  const double sm1 = std::sin((m + 1.0) * x);
  const double den = std::max((ell - r) * sm * sm + r * sm1 * sm1, 1e-300);
  const double ratio = static_cast<double>(r) * (ell - r) * sx * sx / (den * den);
  return std::sqrt(1.0 + ratio);
}

double limit_integral_g(int ell, int r, int m) {
  if (ell < 2 || r < 1 || r >= ell) throw ModelError("need ell >= 2 and 1 <= r < ell");
  if (m < 3) throw ModelError("limit integral needs m >= 3");
  auto g = [&](double x) { return limit_integrand_g(ell, r, m, x); };
  double total = 0.0;
  for (int k = 1; k + 1 < m; ++k) {
    total += integrate_adaptive(g, k * kPi / m, (k + 1) * kPi / m, 1e-13, 1e-11).value;
  }
  return m * total / kPi;
}

double limit_integrand_fpm(int ell, int n, double x, Sign sign) {
  const double u = u_ell(ell, x);
  const double s = sign == Sign::Plus ? 1.0 : -1.0;
  return std::sqrt(std::max(0.0, 1.0 - u * u)) / (1.0 + s * u * std::cos(n * x));
}

CosineLimitIntegrals cosine_limit_integrals(int ell, int n) {
  if (ell < 2) throw ModelError("cosine limit integrals need ell >= 2");
  if (n < 1) throw ModelError("degree n must be >= 1");
  auto piecewise = [&](Sign sign, double lo) {
    auto f = [&](double x) { return limit_integrand_fpm(ell, n, x, sign); };
    const double step = kPi / n;
    const double hi = kPi / 2.0;
    double total = 0.0;
    for (double a = lo; a < hi; a += step) {
      total += integrate_adaptive(f, a, std::min(a + step, hi), 1e-13, 1e-11).value;
    }
    return total / kPi;
  };
  return {piecewise(Sign::Plus, 0.0), piecewise(Sign::Minus, kPi / (2.0 * n))};
}

double cosine_limit_expected(int ell, int n) {
  const auto d = decompose_degree(n, ell);
  if (d.r != 0) throw ModelError("cosine limit needs (n+1) divisible by ell");
  const auto I = cosine_limit_integrals(ell, n);
  const double random = ((n - ell) % 2 == 0) ? n * (I.plus + I.minus) : 2.0 * n * I.plus;
  return (n + 1 - ell) + random;
}

}  // namespace trigzeros
