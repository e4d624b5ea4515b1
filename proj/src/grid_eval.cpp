#include "trigzeros/grid_eval.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "trigzeros/error.hpp"
#include "trigzeros/trigpoly.hpp"

namespace trigzeros {

namespace {

// FFTW planning is not thread safe; execution on fresh arrays is.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan c2r(int nodes) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find(nodes);
    if (it != plans_.end()) return it->second;
    auto* in = fftw_alloc_complex(nodes / 2 + 1);
    auto* out = fftw_alloc_real(nodes);
    fftw_plan plan = fftw_plan_dft_c2r_1d(nodes, in, out, FFTW_ESTIMATE);
    fftw_free(in);
    fftw_free(out);
    plans_.emplace(nodes, plan);
    return plan;
  }

  PlanCache(const PlanCache&) = delete;
  PlanCache& operator=(const PlanCache&) = delete;

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [n, p] : plans_) fftw_destroy_plan(p);
  }
  std::mutex mutex_;
  std::map<int, fftw_plan> plans_;
};

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

}  // namespace

double grid_node(long i, long nodes) {
  return (2.0 * std::numbers::pi * static_cast<double>(i)) / static_cast<double>(nodes);
}

GridValues evaluate_grid_serial(const PolySample& sample, int nodes) {
  GridValues g;
  g.value.resize(nodes);
  g.slope.resize(nodes);
  for (int i = 0; i < nodes; ++i) {
    const auto vs = evaluate_with_derivative(sample, grid_node(i, nodes));
    g.value[i] = vs.value;
    g.slope[i] = vs.slope;
  }
  return g;
}

GridValues evaluate_grid_parallel(const PolySample& sample, int nodes) {
  GridValues g;
  g.value.resize(nodes);
  g.slope.resize(nodes);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < nodes; ++i) {
    const auto vs = evaluate_with_derivative(sample, grid_node(i, nodes));
    g.value[i] = vs.value;
    g.slope[i] = vs.slope;
  }
  return g;
}

GridValues evaluate_grid_fft(const PolySample& sample, int nodes) {
  const int n = sample.n;
  if (nodes <= 2 * n + 1) {
    throw ModelError("FFT grid needs more than 2n+1 nodes (n=" + std::to_string(n) +
                     ", nodes=" + std::to_string(nodes) + ")");
  }
  const int half = nodes / 2 + 1;
  fftw_plan plan = PlanCache::instance().c2r(nodes);
  FftwBuffer<fftw_complex> spec(fftw_alloc_complex(half));
  FftwBuffer<double> out(fftw_alloc_real(nodes));

  // f(x_i) = sum_j Re[(a_j - i b_j) e^{i j x_i}]. The c2r transform returns
  // X_0 + 2 Re sum_{j>0} X_j w^{ij}, so X_0 = a_0 and X_j = (a_j - i b_j)/2.
  GridValues g;
  g.value.resize(nodes);
  g.slope.resize(nodes);

  auto clear = [&] {
    for (int j = 0; j < half; ++j) spec[j][0] = spec[j][1] = 0.0;
  };

  clear();
  spec[0][0] = sample.a[0];
  for (int j = 1; j <= n; ++j) {
    spec[j][0] = 0.5 * sample.a[j];
    spec[j][1] = -0.5 * sample.b[j];
  }
  fftw_execute_dft_c2r(plan, spec.get(), out.get());
  std::copy(out.get(), out.get() + nodes, g.value.begin());

  // f'(x) = sum_j Re[i j (a_j - i b_j) e^{ijx}] = sum_j Re[j (b_j + i a_j) e^{ijx}]
  clear();
  for (int j = 1; j <= n; ++j) {
    spec[j][0] = 0.5 * j * sample.b[j];
    spec[j][1] = 0.5 * j * sample.a[j];
  }
  fftw_execute_dft_c2r(plan, spec.get(), out.get());
  std::copy(out.get(), out.get() + nodes, g.slope.begin());
  return g;
}

GridValues evaluate_grid(const PolySample& sample, int nodes, GridMethod method) {
  switch (method) {
    case GridMethod::Serial:
      return evaluate_grid_serial(sample, nodes);
    case GridMethod::Parallel:
      return evaluate_grid_parallel(sample, nodes);
    case GridMethod::Fft:
      break;
  }
  return evaluate_grid_fft(sample, nodes);
}

}  // namespace trigzeros
