#pragma once

#include <stdexcept>
#include <string>

namespace trigzeros {

/// Invalid ensemble parameters or inconsistent degree/period combinations.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical breakdown: NaN evaluations, non-positive Kac-Rice weights,
/// unstable counts where a stable one is required.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trigzeros
