#pragma once

#include <cstdint>

#include "weakgeo/field.hpp"

namespace weakgeo {

/// Deterministic splittable generator (splitmix64). Every sampled check
/// derives one independent stream per sample index from (seed, index), so
/// reports cannot depend on worker count or platform.
struct Rng {
  std::uint64_t state = 0;

  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    Rng r;
    r.state = seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    r.next();
    r.next();
    return r;
  }

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// uniform in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// rational p/q with p in [-bound, bound], q in [1, bound]
  Rat rat(std::int64_t bound = 12) { return Rat(range(-bound, bound), range(1, bound)); }

  /// nonzero rational with the same coordinate distribution
  Rat rat_nonzero(std::int64_t bound = 12) {
    for (;;) {
      Rat r = rat(bound);
      if (!r.is_zero()) return r;
    }
  }

  /// strictly between 0 and 1
  Rat rat_unit_open(std::int64_t bound = 12) {
    std::int64_t q = range(2, bound);
    std::int64_t p = range(1, q - 1);
    return Rat(p, q);
  }

  Fp fp(std::int64_t p) { return Fp(static_cast<std::int64_t>(below(static_cast<std::uint64_t>(p))), p); }
};

}  // namespace weakgeo
