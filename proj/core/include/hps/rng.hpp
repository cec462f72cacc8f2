#pragma once

#include <array>
#include <cstdint>

namespace hps {

/// xoshiro256** 1.0 (Blackman & Vigna), seeded through splitmix64.
/// A fixed, documented generator so index streams are reproducible across
/// implementations; std::mt19937 distributions are not portable.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform in [0,1) with 53 random mantissa bits.
  double uniform01();

  /// Uniform integer in [0, n). Rejection sampling against the smallest
  /// power-of-two mask covering n; no modulo bias.
  std::uint64_t uniform_below(std::uint64_t n);

  /// Standard normal via the Marsaglia polar method; the spare deviate is
  /// cached, so draws come in deterministic pairs.
  double gaussian();

 private:
  std::array<std::uint64_t, 4> state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hps
