#pragma once

#include "weakgeo/geometry.hpp"
#include "weakgeo/motion.hpp"
#include "weakgeo/rng.hpp"

namespace weakgeo {

/// Constructive samplers: axiom and theorem hypotheses are mostly
/// equational, so configurations are built to satisfy them rather than
/// filtered out of blind draws.

inline QPoint sample_qpoint(Rng& rng, std::int64_t bound = 12) { return {rng.rat(bound), rng.rat(bound)}; }

inline Point<Fp> sample_fp_point(Rng& rng, std::int64_t p) { return {rng.fp(p), rng.fp(p)}; }

template <Scalar F>
Point<F> sample_point(const MetricModel<F>& m, Rng& rng) {
  if constexpr (is_ordered_field_v<F>) {
    (void)m;
    return sample_qpoint(rng);
  } else {
    return sample_fp_point(rng, m.prime());
  }
}

template <Scalar F>
Line<F> sample_line(const MetricModel<F>& m, Rng& rng) {
  for (;;) {
    const Point<F> a = sample_point(m, rng), b = sample_point(m, rng);
    if (a != b) return line_through(a, b);
  }
}

/// rotation about the origin from the rational parametrization of the
/// norm-one circle: a = (1 - c s^2) / (1 + c s^2), b = 2s / (1 + c s^2)
template <Scalar F>
Motion<F> rotation_about_origin(const MetricModel<F>& m, const F& s) {
  const F one = m.from_int(1), two = m.from_int(2);
  const F den = one + m.c() * (s * s);
  if (is_zero(den)) throw std::invalid_argument("rotation parameter hits the excluded denominator");
  const F a = (one - m.c() * (s * s)) / den;
  const F b = (two * s) / den;
  return {a, -(m.c() * b), b, a, {m.from_int(0), m.from_int(0)}};
}

/// a random motion: rotation, optional axis flip, then a translation
template <Scalar F>
Motion<F> sample_isometry(const MetricModel<F>& m, Rng& rng) {
  F s = m.from_int(0);
  if constexpr (is_ordered_field_v<F>) s = rng.rat();
  else s = rng.fp(m.prime());
  Motion<F> iso = rotation_about_origin(m, s);
  if (rng.below(2) == 0) {
    const Motion<F> flip{m.from_int(1), m.from_int(0), m.from_int(0), m.from_int(-1),
                         {m.from_int(0), m.from_int(0)}};
    iso = compose(iso, flip);
  }
  const Point<F> t = sample_point(m, rng);
  iso.t = iso.t + t;
  return iso;
}

}  // namespace weakgeo
