#pragma once

#include <vector>

#include "trigzeros/coeff_models.hpp"

namespace trigzeros {

/// Values and first derivatives of T_n at the uniform nodes
/// x_i = 2*pi*i/N, i = 0..N-1.
struct GridValues {
  std::vector<double> value;
  std::vector<double> slope;
};

enum class GridMethod { Serial, Parallel, Fft };

double grid_node(long i, long nodes);

/// Reference kernel: one series evaluation per node, single thread.
GridValues evaluate_grid_serial(const PolySample& sample, int nodes);

/// Same per-node evaluation, nodes split across OpenMP threads. Bitwise equal
/// to the serial kernel.
GridValues evaluate_grid_parallel(const PolySample& sample, int nodes);

/// Two real inverse FFTs of length `nodes`; requires nodes > 2n + 1.
GridValues evaluate_grid_fft(const PolySample& sample, int nodes);

GridValues evaluate_grid(const PolySample& sample, int nodes, GridMethod method);

}  // namespace trigzeros
