#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weakgeo/field.hpp"

namespace weakgeo {

template <Scalar F>
struct Point {
  F x, y;
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const F& s, const Point& a) { return {s * a.x, s * a.y}; }
};

/// Line u*x + v*y + w = 0 with (u,v) != (0,0), stored normalized: the
/// first nonzero of (u,v) equals 1, so equality is structural.
template <Scalar F>
struct Line {
  F u, v, w;

  Line(F uu, F vv, F ww) : u(std::move(uu)), v(std::move(vv)), w(std::move(ww)) {
    if (is_zero(u) && is_zero(v)) throw std::invalid_argument("Line: (u,v) must not vanish");
    const F s = is_zero(u) ? v : u;
    u = u / s;
    v = v / s;
    w = w / s;
  }

  F eval(const Point<F>& p) const { return u * p.x + v * p.y + w; }
  bool contains(const Point<F>& p) const { return is_zero(eval(p)); }

  friend bool operator==(const Line& a, const Line& b) { return a.u == b.u && a.v == b.v && a.w == b.w; }
  friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }
};

template <Scalar F>
Line<F> line_through(const Point<F>& a, const Point<F>& b) {
  if (a == b) throw std::invalid_argument("line_through: points coincide");
  return Line<F>(a.y - b.y, b.x - a.x, a.x * b.y - b.x * a.y);
}

/// Metric coordinate plane over Q or GF(p) with norm N(x) = x1^2 + c*x2^2
/// and line orthogonality c*u*u' + v*v' = 0. The form must be anisotropic
/// (-c is a non-square), which makes every line reflectable and every
/// segment perpendicularly bisectable.
template <Scalar F>
class MetricModel {
 public:
  MetricModel(F c, std::string descriptor, std::int64_t prime = 0)
      : c_(std::move(c)), desc_(std::move(descriptor)), prime_(prime) {
    if (is_zero(c_)) throw std::invalid_argument("MetricModel: orthogonality constant must be nonzero");
    if (auto s = is_square(-c_)) {
      throw std::invalid_argument("MetricModel: isotropic form, null vector (" + weakgeo::to_string(*s) +
                                  ", 1) has norm zero");
    }
  }

  static constexpr bool ordered = is_ordered_field_v<F>;

  const F& c() const { return c_; }
  const std::string& descriptor() const { return desc_; }
  std::int64_t prime() const { return prime_; }

  F from_int(std::int64_t k) const { return scalar_of(c_, k); }
  Point<F> point(std::int64_t x, std::int64_t y) const { return {from_int(x), from_int(y)}; }

  /// bilinear form of the norm, on direction vectors
  F dot(const Point<F>& a, const Point<F>& b) const { return a.x * b.x + c_ * (a.y * b.y); }
  F norm_vec(const Point<F>& d) const { return dot(d, d); }

 private:
  F c_;
  std::string desc_;
  std::int64_t prime_;
};

// ---------------------------------------------------------------------------
// primitive relations and constructions

template <Scalar F>
F norm(const MetricModel<F>& m, const Point<F>& a, const Point<F>& b) {
  return m.norm_vec(a - b);
}

template <Scalar F>
bool congruent(const MetricModel<F>& m, const Point<F>& a, const Point<F>& b, const Point<F>& p,
               const Point<F>& q) {
  return norm(m, a, b) == norm(m, p, q);
}

template <Scalar F>
F cross(const Point<F>& a, const Point<F>& b) {
  return a.x * b.y - a.y * b.x;
}

/// L(abc): collinear, coincidences allowed
template <Scalar F>
bool collinear(const Point<F>& a, const Point<F>& b, const Point<F>& c) {
  return is_zero(cross(b - a, c - a));
}

/// lambda(abc): three pairwise distinct collinear points
template <Scalar F>
bool strictly_collinear(const Point<F>& a, const Point<F>& b, const Point<F>& c) {
  return a != b && b != c && c != a && collinear(a, b, c);
}

/// Z(abc): b strictly between a and c (ordered models only)
inline bool between(const Point<Rat>& a, const Point<Rat>& b, const Point<Rat>& c) {
  if (a == c) return false;
  const Rat da = c.x - a.x, db = c.y - a.y;
  Rat t;
  if (!da.is_zero()) t = (c.x - b.x) / da;
  else t = (c.y - b.y) / db;
  if (!(t > 0 && t < 1)) return false;
  return b == t * a + ((Rat(1) - t) * c);
}

template <Scalar F>
bool perpendicular(const MetricModel<F>& m, const Line<F>& l1, const Line<F>& l2) {
  return is_zero(m.c() * (l1.u * l2.u) + l1.v * l2.v);
}

/// direction of any line perpendicular to l
template <Scalar F>
Point<F> perp_dir(const MetricModel<F>& m, const Line<F>& l) {
  return {m.c() * l.u, l.v};
}

/// direction vector of l itself
template <Scalar F>
Point<F> line_dir(const Line<F>& l) {
  return {l.v, -l.u};
}

/// F(l p): the unique point f on l with <p,f> perpendicular to l
template <Scalar F>
Point<F> foot(const MetricModel<F>& m, const Point<F>& p, const Line<F>& l) {
  const Point<F> e = perp_dir(m, l);
  const F den = m.c() * (l.u * l.u) + l.v * l.v;  // nonzero by anisotropy
  const F lambda = -(l.eval(p) / den);
  return p + lambda * e;
}

template <Scalar F>
Point<F> reflect_in_line(const MetricModel<F>& m, const Point<F>& p, const Line<F>& l) {
  const Point<F> e = perp_dir(m, l);
  const F den = m.c() * (l.u * l.u) + l.v * l.v;
  const F lambda = -(l.eval(p) / den);
  return p + (m.from_int(2) * lambda) * e;
}

template <Scalar F>
Point<F> reflect_in_point(const Point<F>& p, const Point<F>& center) {
  const auto two = scalar_of(p.x, 2);
  return (two * center) - p;
}

template <Scalar F>
Point<F> midpoint(const Point<F>& a, const Point<F>& b) {
  if (a == b) throw std::invalid_argument("midpoint: degenerate segment");
  const auto half = scalar_of(a.x, 1) / scalar_of(a.x, 2);
  return half * (a + b);
}

template <Scalar F>
Line<F> perpendicular_at(const MetricModel<F>& m, const Line<F>& l, const Point<F>& q) {
  return line_through(q, q + perp_dir(m, l));
}

template <Scalar F>
Line<F> perp_bisector(const MetricModel<F>& m, const Point<F>& a, const Point<F>& b) {
  return perpendicular_at(m, line_through(a, b), midpoint(a, b));
}

template <Scalar F>
std::optional<Point<F>> intersect(const Line<F>& l1, const Line<F>& l2) {
  const F det = l1.u * l2.v - l2.u * l1.v;
  if (is_zero(det)) return std::nullopt;
  const F x = (l1.v * l2.w - l2.v * l1.w) / det;
  const F y = (l2.u * l1.w - l1.u * l2.w) / det;
  return Point<F>{x, y};
}

// ---------------------------------------------------------------------------
// order-dependent predicates (rational models)

using QModel = MetricModel<Rat>;
using QPoint = Point<Rat>;
using QLine = Line<Rat>;

inline int side_of(const QLine& l, const QPoint& p) { return l.eval(p).sign(); }

/// does l cross the open segment (a,b)?
inline bool meets_open_segment(const QLine& l, const QPoint& a, const QPoint& b) {
  return side_of(l, a) * side_of(l, b) < 0;
}

/// the relation ab < ac: the perpendicular bisector of bc meets the open
/// segment ac
inline bool seg_less(const QModel& m, const QPoint& a, const QPoint& b, const QPoint& c) {
  if (a == b || b == c || c == a) throw std::invalid_argument("seg_less: degenerate points");
  return meets_open_segment(perp_bisector(m, b, c), a, c);
}

/// does the ray from o through p meet the open segment (a,b)?
inline bool angle_interior(const QPoint& o, const QPoint& a, const QPoint& b, const QPoint& p) {
  if (collinear(o, a, b)) throw std::invalid_argument("angle_interior: collinear legs");
  if (p == o) throw std::invalid_argument("angle_interior: ray undefined");
  // o + s (p - o) = a + r (b - a), s > 0, 0 < r < 1
  const QPoint d = p - o, e = b - a, rhs = a - o;
  const Rat det = cross(d, e);
  if (det.is_zero()) return false;  // ray parallel to the segment, o off its line
  const Rat s = cross(rhs, e) / det;
  const Rat r = cross(d, rhs) / (-det);
  return s > 0 && r > 0 && r < 1;
}

/// ray od lies between rays oa and ob
inline bool ray_between(const QPoint& o, const QPoint& a, const QPoint& b, const QPoint& d) {
  return angle_interior(o, a, b, d);
}

/// is the angle abc (vertex b) acute?
inline bool is_acute(const QModel& m, const QPoint& a, const QPoint& b, const QPoint& c) {
  if (collinear(a, b, c)) throw std::invalid_argument("is_acute: collinear");
  const QLine l = line_through(b, a);
  const QPoint e = perp_dir(m, l);
  const QPoint cand = b + e;
  const QPoint bp = side_of(l, cand) == side_of(l, c) ? cand : b - e;
  return ray_between(b, a, bp, c);
}

/// second endpoint of the transported segment: the unique x on the closed
/// ray from `from` through `toward` with N(from - x) = length_norm, when
/// the needed square root exists in the field
inline std::optional<QPoint> transport(const QModel& m, const QPoint& from, const QPoint& toward,
                                       const Rat& length_norm) {
  if (from == toward) throw std::invalid_argument("transport: ray undefined");
  const QPoint d = toward - from;
  const auto s = is_square(length_norm / m.norm_vec(d));
  if (!s) return std::nullopt;
  return from + (*s * d);
}

// ---------------------------------------------------------------------------
// angle bisectors

namespace detail {
inline bool line_less(const Line<Fp>& a, const Line<Fp>& b) {
  if (a.u.v != b.u.v) return a.u.v < b.u.v;
  if (a.v.v != b.v.v) return a.v.v < b.v.v;
  return a.w.v < b.w.v;
}
inline bool line_less(const Line<Rat>& a, const Line<Rat>& b) {
  if (a.u != b.u) return a.u < b.u;
  if (a.v != b.v) return a.v < b.v;
  return a.w < b.w;
}
}  // namespace detail

/// The two angle bisectors at vertex a of the non-degenerate angle with
/// legs toward b and c: lines g through a with sigma_g<a,b> = <a,c>. They
/// exist iff N(b-a) N(c-a) is a nonzero square, and are then mutually
/// perpendicular. Ordered models put the internal bisector (the one that
/// meets the open segment bc) first; unordered models return the pair in a
/// canonical but geometrically meaningless order.
template <Scalar F>
std::optional<std::pair<Line<F>, Line<F>>> bisectors(const MetricModel<F>& m, const Point<F>& a,
                                                     const Point<F>& b, const Point<F>& c) {
  if (collinear(a, b, c)) throw std::invalid_argument("bisectors: collinear input");
  const Point<F> beta = b - a, gamma = c - a;
  const auto kappa = is_square(m.norm_vec(gamma) / m.norm_vec(beta));
  if (!kappa) return std::nullopt;
  const Point<F> d1 = (*kappa * beta) + gamma;
  const Point<F> d2 = (*kappa * beta) - gamma;
  Line<F> g1 = line_through(a, a + d1);
  Line<F> g2 = line_through(a, a + d2);
  if constexpr (is_ordered_field_v<F>) {
    if (!meets_open_segment(g1, b, c)) std::swap(g1, g2);
  } else {
    if (detail::line_less(g2, g1)) std::swap(g1, g2);
  }
  return std::make_pair(g1, g2);
}

// ---------------------------------------------------------------------------
// finite-model enumeration

inline std::vector<Point<Fp>> all_points(const MetricModel<Fp>& m) {
  const std::int64_t p = m.prime();
  std::vector<Point<Fp>> pts;
  pts.reserve(static_cast<std::size_t>(p * p));
  for (std::int64_t x = 0; x < p; ++x)
    for (std::int64_t y = 0; y < p; ++y) pts.push_back({Fp(x, p), Fp(y, p)});
  return pts;
}

inline std::vector<Line<Fp>> all_lines(const MetricModel<Fp>& m) {
  const std::int64_t p = m.prime();
  std::vector<Line<Fp>> ls;
  ls.reserve(static_cast<std::size_t>(p * p + p));
  for (std::int64_t v = 0; v < p; ++v)
    for (std::int64_t w = 0; w < p; ++w) ls.emplace_back(Fp(1, p), Fp(v, p), Fp(w, p));
  for (std::int64_t w = 0; w < p; ++w) ls.emplace_back(Fp(0, p), Fp(1, p), Fp(w, p));
  return ls;
}

template <Scalar F>
std::string to_string(const Point<F>& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

template <Scalar F>
std::string to_string(const Line<F>& l) {
  return "[" + to_string(l.u) + ", " + to_string(l.v) + ", " + to_string(l.w) + "]";
}

}  // namespace weakgeo
