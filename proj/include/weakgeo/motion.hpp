#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weakgeo/geometry.hpp"

namespace weakgeo {

/// Form-preserving affine map x |-> L x + t, the concrete carrier of the
/// reflection-group calculus. Composition is function composition:
/// (a * b)(x) = a(b(x)).
template <Scalar F>
struct Motion {
  F l00, l01, l10, l11;
  Point<F> t;

  Point<F> apply(const Point<F>& p) const {
    return {l00 * p.x + l01 * p.y + t.x, l10 * p.x + l11 * p.y + t.y};
  }

  F det() const { return l00 * l11 - l01 * l10; }

  friend bool operator==(const Motion& a, const Motion& b) {
    return a.l00 == b.l00 && a.l01 == b.l01 && a.l10 == b.l10 && a.l11 == b.l11 && a.t == b.t;
  }
  friend bool operator!=(const Motion& a, const Motion& b) { return !(a == b); }
};

template <Scalar F>
Motion<F> identity_motion(const MetricModel<F>& m) {
  const F one = m.from_int(1), zero = m.from_int(0);
  return {one, zero, zero, one, {zero, zero}};
}

template <Scalar F>
bool is_identity(const MetricModel<F>& m, const Motion<F>& a) {
  return a == identity_motion(m);
}

/// L^T G L == G for G = diag(1, c)
template <Scalar F>
bool preserves_form(const MetricModel<F>& m, const Motion<F>& a) {
  const F c = m.c();
  return a.l00 * a.l00 + c * (a.l10 * a.l10) == m.from_int(1) &&
         a.l01 * a.l01 + c * (a.l11 * a.l11) == c &&
         is_zero(a.l00 * a.l01 + c * (a.l10 * a.l11));
}

template <Scalar F>
Motion<F> compose(const Motion<F>& a, const Motion<F>& b) {
  return {a.l00 * b.l00 + a.l01 * b.l10, a.l00 * b.l01 + a.l01 * b.l11,
          a.l10 * b.l00 + a.l11 * b.l10, a.l10 * b.l01 + a.l11 * b.l11,
          a.apply(b.t)};
}

template <Scalar F>
Motion<F> invert(const Motion<F>& a) {
  const F d = a.det();
  const F i00 = a.l11 / d, i01 = -(a.l01 / d), i10 = -(a.l10 / d), i11 = a.l00 / d;
  const Point<F> lt{i00 * a.t.x + i01 * a.t.y, i10 * a.t.x + i11 * a.t.y};
  return {i00, i01, i10, i11, {-lt.x, -lt.y}};
}

/// sigma transported by alpha: the motion acting on alpha-images the way
/// sigma acts on preimages (for a line reflection, the reflection in the
/// image line)
template <Scalar F>
Motion<F> conjugate(const Motion<F>& sigma, const Motion<F>& alpha) {
  return compose(alpha, compose(sigma, invert(alpha)));
}

template <Scalar F>
Motion<F> line_reflection(const MetricModel<F>& m, const Line<F>& l) {
  const F c = m.c();
  const F den = c * (l.u * l.u) + l.v * l.v;
  const F two = m.from_int(2);
  const F k = two / den;
  // x - 2 l(x)/den * (c u, v)
  return {m.from_int(1) - k * (c * l.u * l.u), -(k * (c * l.u * l.v)),
          -(k * (l.v * l.u)), m.from_int(1) - k * (l.v * l.v),
          {-(k * (c * l.u * l.w)), -(k * (l.v * l.w))}};
}

template <Scalar F>
Motion<F> point_reflection(const MetricModel<F>& m, const Point<F>& center) {
  const F zero = m.from_int(0), minus1 = m.from_int(-1), two = m.from_int(2);
  return {minus1, zero, zero, minus1, {two * center.x, two * center.y}};
}

template <Scalar F>
bool is_involution(const MetricModel<F>& m, const Motion<F>& a) {
  return !is_identity(m, a) && is_identity(m, compose(a, a));
}

/// fixed line of an involutory line reflection, if a is one
template <Scalar F>
std::optional<Line<F>> in_S(const MetricModel<F>& m, const Motion<F>& a) {
  if (!is_involution(m, a)) return std::nullopt;
  if (a.det() != m.from_int(-1)) return std::nullopt;
  // fixed points solve (L - I) x + t = 0; for a reflection that is a line
  const F one = m.from_int(1);
  const F r0u = a.l00 - one, r0v = a.l01;
  if (!is_zero(r0u) || !is_zero(r0v)) return Line<F>(r0u, r0v, a.t.x);
  return Line<F>(a.l10, a.l11 - one, a.t.y);
}

/// center of an involutory point reflection, if a is one
template <Scalar F>
std::optional<Point<F>> in_P(const MetricModel<F>& m, const Motion<F>& a) {
  if (!is_involution(m, a)) return std::nullopt;
  const F minus1 = m.from_int(-1);
  if (!(a.l00 == minus1 && a.l11 == minus1 && is_zero(a.l01) && is_zero(a.l10))) return std::nullopt;
  const F half = m.from_int(1) / m.from_int(2);
  return Point<F>{half * a.t.x, half * a.t.y};
}

/// alpha | beta: alpha, beta and alpha*beta are all involutory
template <Scalar F>
bool stroke(const MetricModel<F>& m, const Motion<F>& a, const Motion<F>& b) {
  return is_involution(m, a) && is_involution(m, b) && is_involution(m, compose(a, b));
}

/// product of the three reflections, classified; a line when the pencil
/// condition holds, empty when the product is a glide reflection
template <Scalar F>
std::optional<Line<F>> three_reflections(const MetricModel<F>& m, const Line<F>& a, const Line<F>& b,
                                         const Line<F>& c) {
  const Motion<F> prod = compose(line_reflection(m, a), compose(line_reflection(m, b), line_reflection(m, c)));
  return in_S(m, prod);
}

template <Scalar F>
struct GlideDecomposition {
  Line<F> axis;
  Line<F> b;      // alpha = sigma_b o rho_N
  Point<F> n;
  Point<F> mpt;   // alpha = rho_M o sigma_d
  Line<F> d;
};

/// Split an odd non-reflection motion (a glide reflection) into its two
/// dual point-line products through the axis.
template <Scalar F>
std::optional<GlideDecomposition<F>> glide_decompose(const MetricModel<F>& m, const Motion<F>& a) {
  if (a.det() != m.from_int(-1)) return std::nullopt;  // even motion
  if (is_involution(m, a)) return std::nullopt;        // pure reflection
  // the axis carries all midpoints of (x, a(x))
  const F half = m.from_int(1) / m.from_int(2);
  auto mid_image = [&](const Point<F>& x) { return half * (x + a.apply(x)); };
  const Point<F> p0 = m.point(0, 0), p1 = m.point(1, 0), p2 = m.point(0, 1);
  Point<F> q0 = mid_image(p0);
  Point<F> q1 = mid_image(p1);
  if (q0 == q1) q1 = mid_image(p2);
  const Line<F> axis = line_through(q0, q1);
  const Point<F> base = foot(m, p0, axis);
  const Point<F> shift = half * (a.apply(base) - base);
  const Point<F> half_ahead = base + shift;
  const Line<F> b = perpendicular_at(m, axis, half_ahead);
  const Point<F> n = base;
  const Line<F> d = perpendicular_at(m, axis, base);
  const Point<F> mpt = half_ahead;
  const GlideDecomposition<F> g{axis, b, n, mpt, d};
  if (compose(line_reflection(m, b), point_reflection(m, n)) != a) return std::nullopt;
  if (compose(point_reflection(m, mpt), line_reflection(m, d)) != a) return std::nullopt;
  return g;
}

/// motion swapping A and B while fixing M, when AM = BM makes one exist
template <Scalar F>
std::optional<Motion<F>> find_swapping_motion(const MetricModel<F>& m, const Point<F>& a,
                                              const Point<F>& b, const Point<F>& mid) {
  if (a == b) return identity_motion(m);
  if (norm(m, a, mid) != norm(m, b, mid)) return std::nullopt;
  return line_reflection(m, perp_bisector(m, a, b));
}

/// Definition-1 congruence; in anisotropic planes the motion group is
/// transitive on equal-norm pairs, so this is the norm test
template <Scalar F>
bool segment_congruent_group(const MetricModel<F>& m, const Point<F>& a, const Point<F>& b,
                             const Point<F>& c, const Point<F>& d) {
  return congruent(m, a, b, c, d);
}

// ---------------------------------------------------------------------------
// finite-model sweeps

inline std::vector<Motion<Fp>> all_line_reflections(const MetricModel<Fp>& m) {
  std::vector<Motion<Fp>> out;
  for (const auto& l : all_lines(m)) out.push_back(line_reflection(m, l));
  return out;
}

inline std::vector<Motion<Fp>> all_point_reflections(const MetricModel<Fp>& m) {
  std::vector<Motion<Fp>> out;
  for (const auto& p : all_points(m)) out.push_back(point_reflection(m, p));
  return out;
}

/// S and P are disjoint (no line reflection equals a point reflection)
inline bool model_is_nonelliptic(const MetricModel<Fp>& m) {
  const auto srefl = all_line_reflections(m);
  const auto prefl = all_point_reflections(m);
  for (const auto& s : srefl)
    for (const auto& p : prefl)
      if (s == p) return false;
  return true;
}

struct CharacteristicReport {
  bool ne3 = true;
  std::optional<std::pair<Point<Fp>, Point<Fp>>> witness;  // pair with (AB)^3 = 1
};

/// (rho_A rho_B)^3 != 1 for all A != B
inline CharacteristicReport model_characteristic_ne3(const MetricModel<Fp>& m) {
  const auto pts = all_points(m);
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (a == b) continue;
      const Motion<Fp> ab = compose(point_reflection(m, a), point_reflection(m, b));
      const Motion<Fp> cube = compose(ab, compose(ab, ab));
      if (is_identity(m, cube)) return {false, std::make_pair(a, b)};
    }
  }
  return {true, std::nullopt};
}

/// every form-preserving affine map of the finite plane
inline std::vector<Motion<Fp>> enumerate_motions(const MetricModel<Fp>& m) {
  const std::int64_t p = m.prime();
  std::vector<Motion<Fp>> out;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d) {
          Motion<Fp> cand{Fp(a, p), Fp(b, p), Fp(c, p), Fp(d, p), {Fp(0, p), Fp(0, p)}};
          if (!preserves_form(m, cand)) continue;
          for (std::int64_t tx = 0; tx < p; ++tx)
            for (std::int64_t ty = 0; ty < p; ++ty) {
              cand.t = {Fp(tx, p), Fp(ty, p)};
              out.push_back(cand);
            }
        }
  return out;
}

}  // namespace weakgeo
