#include "disep/random.hpp"

#include "disep/errors.hpp"

namespace disep {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(engine_());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rational Rng::rational(long bound) {
  const long p = uniform(-bound, bound);
  const long q = uniform(1, bound);
  return Rational(p, q);
}

Rational Rng::nonzero_rational(long bound) {
  Rational r;
  do {
    r = rational(bound);
  } while (r.is_zero());
  return r;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined state
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace disep
