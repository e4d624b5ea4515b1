#pragma once

#include <cstdint>
#include <optional>

namespace trigzeros {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 output finalizer (Stafford variant 13). Bijective on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of one Monte Carlo trial:
///   h0 = mix64(master + gamma)
///   h1 = mix64(h0 ^ mix64(n + 2*gamma))
///   seed = mix64(h1 + (trial + 1) * gamma)
/// Depends only on (master, n, trial), so trials can run in any order.
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t n,
                                   std::uint64_t trial) noexcept {
  const std::uint64_t h0 = mix64(master + kGoldenGamma);
  const std::uint64_t h1 = mix64(h0 ^ mix64(n + 2 * kGoldenGamma));
  return mix64(h1 + (trial + 1) * kGoldenGamma);
}

/// Splittable 64-bit generator (Steele, Lea & Flood).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform_open() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// N(0, sigma^2) variates by the Box-Muller transform. Bit-reproducible for a
/// given seed on a given libm.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed, double sigma = 1.0) noexcept
      : rng_(seed), sigma_(sigma) {}

  double next();

 private:
  SplitMix64 rng_;
  double sigma_;
  std::optional<double> spare_;
};

}  // namespace trigzeros
