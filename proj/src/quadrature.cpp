#include "trigzeros/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "trigzeros/error.hpp"

namespace trigzeros {

const GaussRule& gauss_legendre(int points) {
  if (points < 1) throw ModelError("Gauss-Legendre rule needs at least one node");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[points];
  if (!slot) {
    auto rule = std::make_unique<GaussRule>();
    gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(points);
    for (int i = 0; i < points; ++i) {
      double xi = 0.0;
      double wi = 0.0;
      gsl_integration_glfixed_point(-1.0, 1.0, i, &xi, &wi, table);
      rule->nodes.push_back(xi);
      rule->weights.push_back(wi);
    }
    gsl_integration_glfixed_table_free(table);
    slot = std::move(rule);
  }
  return *slot;
}

std::vector<Panel> uniform_panels(double lo, double hi, int count) {
  if (count < 1) throw ModelError("panel count must be positive");
  std::vector<Panel> panels;
  panels.reserve(count);
  const double width = (hi - lo) / count;
  for (int i = 0; i < count; ++i) {
    const double a = lo + i * width;
    const double b = (i + 1 == count) ? hi : lo + (i + 1) * width;
    panels.push_back({a, b});
  }
  return panels;
}

std::vector<Panel> graded_panels(double lo, double hi, int base_panels, int levels,
                                 double ratio, bool grade_lo, bool grade_hi) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw ModelError("grading ratio must lie in (0,1)");
  auto base = uniform_panels(lo, hi, base_panels);
  std::vector<Panel> out;
  auto split_toward_lo = [&](Panel p) {
    // [lo, lo + w*ratio^L], ..., [lo + w*ratio, lo + w]
    std::vector<double> cuts;
    const double w = p.hi - p.lo;
    double scale = 1.0;
    for (int k = 0; k < levels; ++k) scale *= ratio;
    cuts.push_back(p.lo);
    for (int k = levels; k >= 1; --k) {
      cuts.push_back(p.lo + w * scale);
      scale /= ratio;
    }
    cuts.push_back(p.hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back({cuts[i], cuts[i + 1]});
  };
  auto split_toward_hi = [&](Panel p) {
    std::vector<double> cuts;
    const double w = p.hi - p.lo;
    double scale = ratio;
    cuts.push_back(p.lo);
    for (int k = 1; k <= levels; ++k) {
      cuts.push_back(p.hi - w * scale);
      scale *= ratio;
    }
    cuts.push_back(p.hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back({cuts[i], cuts[i + 1]});
  };
  for (std::size_t i = 0; i < base.size(); ++i) {
    const bool first = (i == 0);
    const bool last = (i + 1 == base.size());
    if (first && last && grade_lo && grade_hi) {
      const double mid = 0.5 * (base[i].lo + base[i].hi);
      split_toward_lo({base[i].lo, mid});
      split_toward_hi({mid, base[i].hi});
    } else if (first && grade_lo) {
      split_toward_lo(base[i]);
    } else if (last && grade_hi) {
      split_toward_hi(base[i]);
    } else {
      out.push_back(base[i]);
    }
  }
  return out;
}

std::vector<Panel> panels_with_max_width(double lo, double hi, double max_width) {
  if (!(hi > lo)) return {};
  const int count = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_width - 1e-12)));
  return uniform_panels(lo, hi, count);
}

CompositeRule composite_rule(const std::vector<Panel>& panels, const GaussRule& rule) {
  CompositeRule c;
  const std::size_t q = rule.nodes.size();
  c.x.reserve(panels.size() * q);
  c.w.reserve(panels.size() * q);
  for (const auto& p : panels) {
    const double half = 0.5 * (p.hi - p.lo);
    const double mid = 0.5 * (p.hi + p.lo);
    for (std::size_t i = 0; i < q; ++i) {
      c.x.push_back(mid + half * rule.nodes[i]);
      c.w.push_back(half * rule.weights[i]);
    }
  }
  return c;
}

QuadratureSum integrate_composite(const std::function<double(double)>& f,
                                  const std::vector<Panel>& panels, const GaussRule& rule,
                                  Execution exec) {
  const long count = static_cast<long>(panels.size());
  std::vector<double> partial(count, 0.0);
  std::vector<double> partial_abs(count, 0.0);
  const std::size_t q = rule.nodes.size();
  auto panel_sum = [&](long i) {
    const double half = 0.5 * (panels[i].hi - panels[i].lo);
    const double mid = 0.5 * (panels[i].hi + panels[i].lo);
    double s = 0.0;
    double sa = 0.0;
    for (std::size_t k = 0; k < q; ++k) {
      const double v = rule.weights[k] * f(mid + half * rule.nodes[k]);
      s += v;
      sa += std::abs(v);
    }
    partial[i] = half * s;
    partial_abs[i] = half * sa;
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) panel_sum(i);
  } else {
    for (long i = 0; i < count; ++i) panel_sum(i);
  }
  QuadratureSum out;
  for (long i = 0; i < count; ++i) {
    out.value += partial[i];
    out.abs_value += partial_abs[i];
  }
  return out;
}

namespace {

double gsl_trampoline(double x, void* params) {
  return (*static_cast<const std::function<double(double)>*>(params))(x);
}

}  // namespace

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double lo,
                                  double hi, double epsabs, double epsrel) {
  constexpr std::size_t kLimit = 4000;
  gsl_integration_workspace* ws = gsl_integration_workspace_alloc(kLimit);
  gsl_function gf;
  gf.function = &gsl_trampoline;
  gf.params = const_cast<std::function<double(double)>*>(&f);
  AdaptiveResult res;
  static const bool handler_off = (gsl_set_error_handler_off(), true);
  (void)handler_off;
  const int status = gsl_integration_qag(&gf, lo, hi, epsabs, epsrel, kLimit,
                                         GSL_INTEG_GAUSS21, ws, &res.value, &res.abs_error);
  gsl_integration_workspace_free(ws);
  if (status != GSL_SUCCESS && status != GSL_EROUND) {
    throw NumericalError(std::string("adaptive quadrature failed: ") + gsl_strerror(status));
  }
  return res;
}

PanelAdaptiveSum integrate_panels_adaptive(const std::function<double(double)>& f,
                                           const std::vector<Panel>& panels, double epsabs,
                                           double epsrel, Execution exec) {
  const long count = static_cast<long>(panels.size());
  std::vector<AdaptiveResult> parts(count);
  std::vector<double> abs_parts(count, 0.0);
  std::vector<std::string> failures(count);
  auto one = [&](long i) {
    try {
      parts[i] = integrate_adaptive(f, panels[i].lo, panels[i].hi, epsabs, epsrel);
      abs_parts[i] = std::abs(parts[i].value);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) one(i);
  } else {
    for (long i = 0; i < count; ++i) one(i);
  }
  PanelAdaptiveSum out;
  for (long i = 0; i < count; ++i) {
    if (!failures[i].empty()) throw NumericalError(failures[i]);
    out.value += parts[i].value;
    out.abs_value += abs_parts[i];
    out.abs_error += parts[i].abs_error;
  }
  return out;
}

}  // namespace trigzeros
