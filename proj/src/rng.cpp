#include "trigzeros/rng.hpp"

#include <cmath>
#include <numbers>

namespace trigzeros {

double GaussianStream::next() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = rng_.uniform_open();
  const double u2 = rng_.uniform_open();
  const double radius = sigma_ * std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(theta);
  return radius * std::cos(theta);
}

}  // namespace trigzeros
