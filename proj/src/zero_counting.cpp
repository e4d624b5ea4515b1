#include "trigzeros/zero_counting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "trigzeros/error.hpp"
#include "trigzeros/trigpoly.hpp"

namespace trigzeros {

namespace {

constexpr int kMaxSubdivisionDepth = 48;
constexpr double kNoiseFactor = 1e-12;

int sign_of(double v, double noise) {
  if (std::abs(v) <= noise) return 0;
  return v > 0.0 ? 1 : -1;
}

struct Bracket {
  double lo;
  double hi;
  bool exact;  // root sits on a zero node at `lo`
};

class PassScanner {
 public:
  struct Node {
    double x;
    double value;
    double slope;
    double noise;  // evaluation error bound of `value`
  };

  PassScanner(const PolySample& sample, int nodes, bool record)
      : sample_(sample), nodes_(nodes), record_(record) {
    l1_ = coefficient_l1(sample);
    noise_ = kNoiseFactor * l1_;
    direct_noise_ = std::max(16, sample.n) * std::numeric_limits<double>::epsilon() * l1_;
  }

  /// Nodes 0, x_0..x_{N-1}, 2*pi with x_i = offset + 2*pi*i/N. `grid` holds
  /// the values at x_0..x_{N-1}; the ends are evaluated directly.
  int scan(const GridValues& grid, double offset) {
    if (l1_ == 0.0) return 0;
    const int last = nodes_ + 1;
    const auto at_zero = evaluate_with_derivative(sample_, 0.0);
    std::vector<Node> node(last + 1);
    std::vector<int> sign(last + 1);
    for (int i = 0; i <= last; ++i) {
      if (i == 0 || i == last) {
        node[i] = {i == 0 ? 0.0 : 2.0 * std::numbers::pi, at_zero.value, at_zero.slope,
                   direct_noise_};
      } else {
        node[i] = {offset + grid_node(i - 1, nodes_), grid.value[i - 1], grid.slope[i - 1],
                   noise_};
      }
      if (!std::isfinite(node[i].value) || !std::isfinite(node[i].slope)) {
        throw NumericalError("non-finite polynomial value at x=" + std::to_string(node[i].x));
      }
      sign[i] = sign_of(node[i].value, node[i].noise);
      if (sign[i] == 0 && node[i].noise > direct_noise_) {
        // below the grid floor: look again with the more accurate direct sum
        const auto v = evaluate_with_derivative(sample_, node[i].x);
        node[i] = {node[i].x, v.value, v.slope, direct_noise_};
        sign[i] = sign_of(v.value, direct_noise_);
      }
    }

    int prev = -1;
    for (int i = 0; i <= last; ++i) {
      if (sign[i] != 0) {
        prev = i;
        break;
      }
    }
    if (prev < 0) return 0;

    int count = 0;
    for (int i = prev + 1; i <= last; ++i) {
      if (sign[i] == 0) continue;
      if (i == prev + 1) {
        if (sign[i] != sign[prev]) {
          ++count;
          if (record_) brackets_.push_back({node[prev].x, node[i].x, false});
        } else {
          count += same_sign_cell(node[prev], node[i], 0);
        }
      } else if (sign[i] != sign[prev]) {
        // crossing through a run of zero nodes: one root, at the first of them
        ++count;
        if (record_) brackets_.push_back({node[prev + 1].x, node[prev + 1].x, true});
      }
      prev = i;
    }
    return count;
  }

  const std::vector<Bracket>& brackets() const { return brackets_; }

 private:
  // Minimum of s*p over [0,1] for the cubic Hermite interpolant p.
  static double hermite_min(double f0, double f1, double m0, double m1, double s) {
    const double c2 = 3.0 * (f1 - f0) - 2.0 * m0 - m1;
    const double c3 = 2.0 * (f0 - f1) + m0 + m1;
    auto p = [&](double t) { return s * (f0 + t * (m0 + t * (c2 + t * c3))); };
    double best = std::min(p(0.0), p(1.0));
    // p'(t) = m0 + 2 c2 t + 3 c3 t^2
    const double qa = 3.0 * c3;
    const double qb = 2.0 * c2;
    const double qc = m0;
    auto consider = [&](double t) {
      if (t > 0.0 && t < 1.0) best = std::min(best, p(t));
    };
    if (std::abs(qa) < 1e-300) {
      if (std::abs(qb) > 1e-300) consider(-qc / qb);
    } else {
      const double disc = qb * qb - 4.0 * qa * qc;
      if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        const double q = -0.5 * (qb + std::copysign(root, qb));
        if (q != 0.0) {
          consider(q / qa);
          consider(qc / q);
        } else {
          consider(0.0);
        }
      }
    }
    return best;
  }

  // Grid nodes carry the FFT floor, bisection midpoints the tighter floor of
  // direct evaluation, so dips between grid floor and direct floor resolve.
  int same_sign_cell(Node lo, Node hi, int depth) {
    const double h = hi.x - lo.x;
    const double s = lo.value > 0.0 ? 1.0 : -1.0;
    const double bound =
        std::pow(h * sample_.n, 4) / 384.0 * l1_ + std::max(lo.noise, hi.noise);
    if (hermite_min(lo.value, hi.value, h * lo.slope, h * hi.slope, s) > bound) return 0;
    if (depth >= kMaxSubdivisionDepth) return 0;  // tangential within resolution

    // A split point that lands on a root has no usable sign; move it off.
    double mid = 0.0;
    ValueAndSlope vm;
    int sm = 0;
    for (double frac : {0.5, 0.381966011250105, 0.618033988749895}) {
      mid = lo.x + frac * h;
      vm = evaluate_with_derivative(sample_, mid);
      if (!std::isfinite(vm.value)) {
        throw NumericalError("non-finite polynomial value at x=" + std::to_string(mid));
      }
      sm = sign_of(vm.value, direct_noise_);
      if (sm != 0) break;
    }
    if (sm == 0) return 0;
    if ((sm > 0) != (s > 0)) {
      if (record_) {
        brackets_.push_back({lo.x, mid, false});
        brackets_.push_back({mid, hi.x, false});
      }
      return 2;
    }
    const Node m{mid, vm.value, vm.slope, direct_noise_};
    return same_sign_cell(lo, m, depth + 1) + same_sign_cell(m, hi, depth + 1);
  }

  const PolySample& sample_;
  int nodes_;
  bool record_;
  double l1_ = 0.0;
  double noise_ = 0.0;
  double direct_noise_ = 0.0;
  std::vector<Bracket> brackets_;
};

// Grid offset as a fraction of the node spacing. Irrational, so nodes never
// land on the rational multiples of pi where structured zeros sit.
constexpr double kOffsetFraction = 0.38196601125010515;

// T(x + offset) as a new coefficient set.
PolySample rotated(const PolySample& sample, double offset) {
  PolySample out = sample;
  for (int j = 0; j <= sample.n; ++j) {
    const double c = std::cos(j * offset);
    const double s = std::sin(j * offset);
    out.a[j] = sample.a[j] * c + sample.b[j] * s;
    out.b[j] = sample.b[j] * c - sample.a[j] * s;
  }
  return out;
}

int base_grid_size(const PolySample& sample, int grid_per_degree) {
  long nodes = std::max<long>(256, static_cast<long>(grid_per_degree) * sample.n);
  nodes = std::max<long>(nodes, 2L * sample.n + 2);
  return static_cast<int>(nodes);
}

}  // namespace

ZeroCountReport count_zeros(const PolySample& sample, const CountOptions& options) {
  if (options.grid_per_degree < 8) {
    throw ModelError("grid_per_degree must be >= 8 (got " +
                     std::to_string(options.grid_per_degree) + ")");
  }
  if (!(options.tol > 0.0)) throw ModelError("refinement tolerance must be positive");
  if (options.doubling_cap < 0) throw ModelError("doubling cap must be non-negative");

  ZeroCountReport report;
  int nodes = base_grid_size(sample, options.grid_per_degree);
  std::vector<Bracket> final_brackets;

  auto run_pass = [&](int n_nodes) {
    PassScanner scanner(sample, n_nodes, options.collect_roots);
    const double offset = kOffsetFraction * 2.0 * std::numbers::pi / n_nodes;
    const int c =
        scanner.scan(evaluate_grid(rotated(sample, offset), n_nodes, options.method), offset);
    if (c > 2 * sample.n) {
      throw NumericalError("zero count " + std::to_string(c) + " exceeds 2n = " +
                           std::to_string(2 * sample.n));
    }
    report.count_history.push_back(c);
    report.grid_size = n_nodes;
    if (options.collect_roots) final_brackets = scanner.brackets();
  };

  run_pass(nodes);
  while (report.doublings_used < options.doubling_cap) {
    nodes *= 2;
    ++report.doublings_used;
    run_pass(nodes);
    const auto& h = report.count_history;
    const std::size_t k = h.size();
    if (k >= 3 && h[k - 1] == h[k - 2] && h[k - 2] == h[k - 3]) {
      report.stable = true;
      break;
    }
  }
  report.count = report.count_history.back();

  if (options.collect_roots) {
    report.roots.reserve(final_brackets.size());
    for (const auto& b : final_brackets) {
      report.roots.push_back(b.exact ? b.lo : refine_root(sample, b.lo, b.hi, options.tol));
    }
    std::sort(report.roots.begin(), report.roots.end());
  }
  return report;
}

std::vector<double> deterministic_zero_set(int m, int ell) {
  if (m < 1 || ell < 1) throw ModelError("deterministic_zero_set needs m, ell >= 1");
  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(ell) * (m - 1));
  const double denom = static_cast<double>(m) * ell;
  for (int k = 0; k < ell; ++k) {
    for (int j = 1; j < m; ++j) {
      zeros.push_back(2.0 * std::numbers::pi * static_cast<double>(j + k * m) / denom);
    }
  }
  return zeros;
}

RootRefinement refine_root_detail(const PolySample& sample, double lo, double hi,
                                  double tol) {
  if (!(tol > 0.0)) throw ModelError("bisection tolerance must be positive");
  if (hi < lo) std::swap(lo, hi);
  double flo = evaluate(sample, lo);
  const double fhi = evaluate(sample, hi);
  if (flo == 0.0) return {lo, 0};
  if (fhi == 0.0) return {hi, 0};
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw ModelError("refine_root: interval does not bracket a sign change");
  }
  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = evaluate(sample, mid);
    ++iterations;
    if (fm == 0.0) return {mid, iterations};
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), iterations};
}

double refine_root(const PolySample& sample, double lo, double hi, double tol) {
  return refine_root_detail(sample, lo, hi, tol).x;
}

void write_roots_csv(std::ostream& os, const PolySample& sample,
                     const ZeroCountReport& report) {
  os << "index,x,residual\n";
  char line[128];
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    const double x = report.roots[i];
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g\n", i, x, evaluate(sample, x));
    os << line;
  }
}

}  // namespace trigzeros
