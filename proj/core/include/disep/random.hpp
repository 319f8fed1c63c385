#pragma once

#include <cstdint>
#include <random>

#include "disep/rational.hpp"

namespace disep {

/// Seeded generator with platform-independent bounded draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi], by rejection on the raw 64-bit stream.
  long uniform(long lo, long hi);
  bool coin() { return (engine_() >> 63) != 0; }
  std::uint64_t next() { return engine_(); }

  /// p/q with |p| <= bound and 1 <= q <= bound.
  Rational rational(long bound = 9);
  Rational nonzero_rational(long bound = 9);

 private:
  std::mt19937_64 engine_;
};

/// Independent seed for sub-task `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace disep
