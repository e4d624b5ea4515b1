#pragma once

#include <iosfwd>
#include <vector>

#include "trigzeros/coeff_models.hpp"
#include "trigzeros/grid_eval.hpp"

namespace trigzeros {

struct CountOptions {
  int grid_per_degree = 32;
  double tol = 1e-12;
  int doubling_cap = 4;
  bool collect_roots = false;
  GridMethod method = GridMethod::Fft;
};

/// Real zeros of one sample on the open interval (0, 2*pi).
struct ZeroCountReport {
  int count = 0;
  std::vector<double> roots;      // filled when CountOptions::collect_roots
  int grid_size = 0;              // nodes of the final pass
  int doublings_used = 0;
  bool stable = false;
  std::vector<int> count_history; // one entry per grid pass
};

/// Scans max(256, grid_per_degree*n) uniform nodes and doubles the grid until
/// three consecutive passes agree or `doubling_cap` doublings were spent. The
/// nodes are shifted off 2*pi*i/N by an irrational fraction of the spacing so
/// that zeros at rational multiples of pi never sit on a node.
///
/// Per pass, a strict sign change between neighbouring nodes is one root. A
/// node with |f| below the evaluation-noise floor is a zero node: it counts as
/// one root when the signs on either side differ and as a tangential touch
/// otherwise. Cells without a sign change are certified root-free by a cubic
/// Hermite bound, or bisected until they are.
ZeroCountReport count_zeros(const PolySample& sample, const CountOptions& options = {});

/// The ell*(m-1) zeros of phi_m in (0, 2*pi), ascending.
std::vector<double> deterministic_zero_set(int m, int ell);

struct RootRefinement {
  double x = 0.0;
  int iterations = 0;
};

/// Bisection on a sign-changing bracket down to width <= tol.
RootRefinement refine_root_detail(const PolySample& sample, double lo, double hi,
                                  double tol);
double refine_root(const PolySample& sample, double lo, double hi, double tol);

/// CSV with columns index,x,residual.
void write_roots_csv(std::ostream& os, const PolySample& sample,
                     const ZeroCountReport& report);

}  // namespace trigzeros
