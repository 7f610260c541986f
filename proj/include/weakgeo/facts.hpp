#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weakgeo/axioms.hpp"

namespace weakgeo {

namespace detail {

/// One attempt at a constructive configuration: nullopt asks for a redraw
/// (degenerate sample), otherwise the instance was hypothesis-satisfying
/// and the conclusion was evaluated.
using FactTry = std::optional<Outcome>;

inline FactTry fact_f1(const QModel& m, Rng& rng) {
  const QPoint b = sample_qpoint(rng), zdir = sample_qpoint(rng), a = sample_qpoint(rng);
  if (zdir == b || a == b) return std::nullopt;
  const QLine g = line_through(b, zdir);
  if (g.contains(a)) return std::nullopt;
  const QPoint u = reflect_in_line(m, a, g);
  if (collinear(a, b, u)) return std::nullopt;
  const Rat mu = rng.rat_nonzero();
  const QPoint mid = b + (mu * (zdir - b));
  if (!congruent(m, b, a, b, u) || !congruent(m, mid, a, mid, u) || mid == b) return std::nullopt;
  const Rat tau = rng.rat();
  const QPoint p = b + (tau * (mid - b));
  const QPoint x = foot(m, p, line_through(b, a));
  const QPoint y = foot(m, p, line_through(b, u));
  if (congruent(m, p, x, p, y) && congruent(m, b, x, b, y)) return checked();
  return violation({"F1: px=py and bx=by fail on the bisector",
                    {wvar("a", a), wvar("b", b), wvar("u", u), wvar("m", mid), wvar("p", p),
                     wvar("x", x), wvar("y", y)}});
}

inline FactTry fact_f4(const QModel& m, Rng& rng) {
  const QPoint a = sample_qpoint(rng), b = sample_qpoint(rng);
  if (a == b) return std::nullopt;
  const QPoint e = perp_dir(m, line_through(a, b));
  const Rat alpha(rng.range(1, 12), rng.range(1, 12)), beta(rng.range(1, 12), rng.range(1, 12));
  const QPoint c = a + (alpha * (b - a)) + (beta * e);
  if (collinear(b, a, c) || !is_acute(m, b, a, c)) return std::nullopt;
  if (!is_acute(m, c, a, b))
    return violation({"F4: angle bac acute but cab not",
                      {wvar("a", a), wvar("b", b), wvar("c", c)}});
  // a sub-angle with both legs strictly inside
  const Rat m1(rng.range(1, 12), rng.range(1, 12)), n1(rng.range(1, 12), rng.range(1, 12));
  const Rat m2(rng.range(1, 12), rng.range(1, 12)), n2(rng.range(1, 12), rng.range(1, 12));
  const QPoint b1 = a + (m1 * (b - a)) + (n1 * (c - a));
  const QPoint c1 = a + (m2 * (b - a)) + (n2 * (c - a));
  if (collinear(b1, a, c1)) return std::nullopt;
  if (!is_acute(m, b1, a, c1))
    return violation({"F4: interior angle not acute",
                      {wvar("a", a), wvar("b", b), wvar("c", c), wvar("b1", b1), wvar("c1", c1)}});
  const auto phi = sample_isometry(m, rng);
  const QPoint a1 = phi.apply(a), b2 = phi.apply(b), c2 = phi.apply(c);
  if (!(congruent(m, a, b, a1, b2) && congruent(m, b, c, b2, c2) && congruent(m, c, a, c2, a1)))
    return std::nullopt;
  if (is_acute(m, b2, a1, c2)) return checked();
  return violation({"F4: congruent image of an acute angle not acute",
                    {wvar("a", a), wvar("b", b), wvar("c", c), wvar("a'", a1), wvar("b'", b2),
                     wvar("c'", c2)}});
}

inline FactTry fact_f5(const QModel& m, Rng& rng) {
  const QPoint a = sample_qpoint(rng), c = sample_qpoint(rng);
  if (a == c) return std::nullopt;
  const Rat t = rng.rat_unit_open();
  const QPoint b = t * a + ((Rat(1) - t) * c);
  const auto phi = sample_isometry(m, rng);
  const QPoint a1 = phi.apply(a), b1 = phi.apply(b), c1 = phi.apply(c);
  if (!(between(a, b, c) && between(a1, b1, c1) && congruent(m, a, c, a1, c1) &&
        congruent(m, a, b, a1, b1)))
    return std::nullopt;
  if (congruent(m, b, c, b1, c1)) return checked();
  return violation({"F5: subtracting equals from equals fails",
                    {wvar("a", a), wvar("b", b), wvar("c", c), wvar("a'", a1), wvar("b'", b1),
                     wvar("c'", c1)}});
}

inline FactTry fact_f6(const QModel& m, Rng& rng) {
  const QPoint z1 = sample_qpoint(rng), z2 = sample_qpoint(rng);
  if (z1 == z2) return std::nullopt;
  const QLine l = line_through(z1, z2);
  const QPoint o = z1 + (rng.rat() * (z2 - z1));
  const QPoint bp = sample_qpoint(rng);
  if (l.contains(bp)) return std::nullopt;
  const Rat tau = rng.rat_unit_open();
  const QPoint ap = o + (tau * (bp - o));
  const QPoint a = foot(m, ap, l), b = foot(m, bp, l);
  if (a == b || a == o || b == o) return std::nullopt;
  if (!between(o, ap, bp)) return std::nullopt;
  if (between(o, a, b)) return checked();
  return violation({"F6: projection does not preserve betweenness",
                    {wvar("o", o), wvar("a'", ap), wvar("b'", bp), wvar("a", a), wvar("b", b)}});
}

inline FactTry fact_f7(const QModel& m, Rng& rng) {
  const QPoint a = sample_qpoint(rng), z = sample_qpoint(rng), b = sample_qpoint(rng);
  if (z == a || b == a) return std::nullopt;
  const QLine g = line_through(a, z);
  if (g.contains(b)) return std::nullopt;
  const QPoint c = reflect_in_line(m, b, g);
  if (collinear(a, b, c) || !congruent(m, a, b, a, c)) return std::nullopt;
  const QLine lbc = line_through(b, c);
  const QPoint e = perp_dir(m, lbc);
  const int side_a = side_of(lbc, a);
  auto erect = [&](const QPoint& at) -> std::optional<QPoint> {
    const QPoint cand = at + e;
    if (side_of(lbc, cand) == side_a) return cand;
    const QPoint cand2 = at - e;
    if (side_of(lbc, cand2) == side_a) return cand2;
    return std::nullopt;
  };
  const auto bp = erect(b), cp = erect(c);
  if (!bp || !cp) return std::nullopt;
  if (ray_between(b, c, *bp, a) && ray_between(c, b, *cp, a)) return checked();
  return violation({"F7: base angle of an isosceles triangle not acute",
                    {wvar("a", a), wvar("b", b), wvar("c", c), wvar("b'", *bp), wvar("c'", *cp)}});
}

inline FactTry fact_f8(const QModel& m, Rng& rng) {
  const QPoint a = sample_qpoint(rng), c = sample_qpoint(rng);
  if (a == c) return std::nullopt;
  const Rat t = rng.rat_unit_open();
  const QPoint b = (Rat(1) - t) * a + (t * c);
  const auto phi = sample_isometry(m, rng);
  const QPoint a1 = phi.apply(a), b1 = phi.apply(b), c1 = phi.apply(c);
  if (!(between(a, b, c) && congruent(m, a, b, a1, b1) && congruent(m, a, c, a1, c1) &&
        (between(a1, b1, c1) || between(a1, c1, b1))))
    return std::nullopt;
  if (between(a1, b1, c1)) return checked();
  return violation({"F8: order not transferred",
                    {wvar("a", a), wvar("b", b), wvar("c", c), wvar("a'", a1), wvar("b'", b1),
                     wvar("c'", c1)}});
}

inline FactTry fact_f10(const QModel& m, Rng& rng) {
  const QPoint a = sample_qpoint(rng), z = sample_qpoint(rng), b = sample_qpoint(rng);
  if (z == a || b == a) return std::nullopt;
  const QLine g = line_through(a, z);
  if (g.contains(b)) return std::nullopt;
  const QPoint leg = reflect_in_line(m, b, g);  // interior bisector g exists by construction
  const Rat xi = rng.rat(), eta = rng.rat(), mu = rng.rat(), nu = rng.rat();
  if (xi == eta || mu == nu) return std::nullopt;
  const QPoint x = a + (xi * (b - a)), y = a + (eta * (b - a));
  const QPoint u = a + (mu * (leg - a)), v = a + (nu * (leg - a));
  const auto zpt = transport(m, u, reflect_in_point(v, u), norm(m, x, y));
  if (zpt && congruent(m, u, *zpt, x, y) && between(v, u, *zpt)) return checked();
  Witness w{"F10: segment not transportable onto the halfline",
            {wvar("a", a), wvar("b", b), wvar("x", x), wvar("y", y), wvar("u", u), wvar("v", v)}};
  if (zpt) w.vars.push_back(wvar("z", *zpt));
  return violation(std::move(w));
}

inline FactTry fact_f11(const QModel& m, Rng& rng) {
  const QPoint a = sample_qpoint(rng), b = sample_qpoint(rng);
  if (a == b) return std::nullopt;
  const auto phi = sample_isometry(m, rng);
  const QPoint a1 = phi.apply(a), b1 = phi.apply(b);
  if (!congruent(m, a, b, a1, b1)) return std::nullopt;
  const QLine l = line_through(a, b), l1 = line_through(a1, b1);
  if (l == l1) return checked();  // shared line: the line itself reflects onto itself
  const auto q = intersect(l, l1);
  if (!q) return std::nullopt;  // parallel: hypothesis fails
  const QPoint d = b - a, d1 = b1 - a1;
  for (const QPoint& dir : {d + d1, d - d1}) {
    if (dir == (QPoint{Rat(0), Rat(0)})) continue;
    const QLine g = line_through(*q, *q + dir);
    const QPoint ia = reflect_in_line(m, a, g), ib = reflect_in_line(m, b, g);
    if (ia != ib && line_through(ia, ib) == l1) return checked();
  }
  return violation({"F11: intersecting congruent segments without an angle bisector",
                    {wvar("a", a), wvar("b", b), wvar("a'", a1), wvar("b'", b1), wvar("q", *q)}});
}

inline FactTry fact_f12(const QModel& m, Rng& rng) {
  const QPoint a = sample_qpoint(rng), b = sample_qpoint(rng), c = sample_qpoint(rng);
  if (collinear(a, b, c)) return std::nullopt;
  const Rat tau = rng.rat();
  const QPoint d = a + (tau * (c - a));
  const auto phi = sample_isometry(m, rng);
  const QPoint a1 = phi.apply(a), b1 = phi.apply(b), c1 = phi.apply(c), d1 = phi.apply(d);
  if (!(congruent(m, a, b, a1, b1) && congruent(m, a, c, a1, c1) && congruent(m, c, b, c1, b1) &&
        collinear(a, d, c) && congruent(m, a, d, a1, d1) && congruent(m, d, c, d1, c1)))
    return std::nullopt;
  const QPoint f = foot(m, d, line_through(a, b));
  const QPoint f1 = foot(m, d1, line_through(a1, b1));
  if (congruent(m, d, f, d1, f1)) return checked();
  return violation({"F12: distances to the corresponding side differ",
                    {wvar("a", a), wvar("b", b), wvar("c", c), wvar("d", d), wvar("a'", a1),
                     wvar("b'", b1), wvar("c'", c1), wvar("d'", d1)}});
}

inline FactTry fact_f13(const QModel& m, Rng& rng) {
  const QPoint a = sample_qpoint(rng), b = sample_qpoint(rng);
  if (a == b) return std::nullopt;
  const QLine l = line_through(a, b);
  const QPoint p1 = sample_qpoint(rng);
  if (l.contains(p1)) return std::nullopt;
  const Rat s = rng.rat_nonzero();
  const QPoint p2 = p1 + (s * (b - a));
  const QPoint f1 = foot(m, p1, l), f2 = foot(m, p2, l);
  if (!(side_of(l, p1) == side_of(l, p2) && congruent(m, p1, f1, p2, f2) && p1 != p2))
    return std::nullopt;
  if (!intersect(line_through(p1, p2), l).has_value()) return checked();
  return violation({"F13: equidistant points on one side but the lines meet",
                    {wvar("a", a), wvar("b", b), wvar("p1", p1), wvar("p2", p2)}});
}

inline FactTry fact_l1(const QModel& m, Rng& rng) {
  const QPoint c = sample_qpoint(rng), s = sample_qpoint(rng);
  if (c == s) return std::nullopt;
  const Rat nu = Rat(1) + Rat(rng.range(1, 12), rng.range(1, 12));
  const QPoint n = c + (nu * (s - c));
  const QPoint z = sample_qpoint(rng);
  if (z == c) return std::nullopt;
  const QLine gl = line_through(c, z);
  const QPoint mp = reflect_in_line(m, n, gl);
  if (mp == n) return std::nullopt;
  const Rat chi = rng.rat_unit_open();
  const QPoint x = c + (chi * (mp - c));
  if (x == s) return std::nullopt;
  const Rat beta = Rat(1) + Rat(rng.range(1, 12), rng.range(1, 12));
  const QPoint b = s + (beta * (x - s));
  if (collinear(b, s, c) || b == mp || mp == n || b == n) return std::nullopt;
  if (!(between(b, x, s) && between(c, x, mp) && between(c, s, n) && congruent(m, c, n, c, mp)))
    return std::nullopt;
  if (seg_less(m, b, mp, n)) return checked();
  return violation({"L1: bm' < bn fails",
                    {wvar("b", b), wvar("s", s), wvar("c", c), wvar("x", x), wvar("m'", mp),
                     wvar("n", n)}});
}

inline FactTry fact_l2(const QModel& m, Rng& rng) {
  const QPoint a = sample_qpoint(rng), c = sample_qpoint(rng);
  if (a == c) return std::nullopt;
  const Rat tau = rng.rat_unit_open();
  const QPoint bp = a + (tau * (c - a));
  const QPoint z = sample_qpoint(rng);
  if (z == a) return std::nullopt;
  const QLine gl = line_through(a, z);
  const QPoint b = reflect_in_line(m, bp, gl);
  if (b == bp || collinear(a, b, c) || b == c) return std::nullopt;
  const QPoint o = midpoint(b, c);
  if (!(between(b, o, c) && congruent(m, o, b, o, c) && between(a, bp, c) &&
        congruent(m, a, b, a, bp)))
    return std::nullopt;
  if (seg_less(m, a, b, c)) return checked();
  return violation({"L2: ab < ac fails",
                    {wvar("a", a), wvar("b", b), wvar("b'", bp), wvar("c", c), wvar("o", o)}});
}

inline FactTry fact_l3(const QModel& m, Rng& rng) {
  const QPoint o = sample_qpoint(rng), b = sample_qpoint(rng);
  if (o == b) return std::nullopt;
  const auto rot1 = rotation_about_origin(m, rng.rat());
  const QPoint w = o + rot1.apply(b - o);
  if (w == b) return std::nullopt;
  const QPoint a = midpoint(b, w);
  if (a == o) return std::nullopt;
  QPoint d = o;
  if (rng.below(2) == 0) {
    const auto rot2 = rotation_about_origin(m, rng.rat());
    d = o + rot2.apply(b - o);
  } else {
    const QPoint z = sample_qpoint(rng);
    if (z == o) return std::nullopt;
    d = reflect_in_line(m, b, line_through(o, z));
  }
  if (d == o || collinear(a, b, d) || o == a) return std::nullopt;
  const auto cpt = intersect(line_through(a, b), line_through(o, d));
  if (!cpt) return std::nullopt;
  const QPoint c = *cpt;
  const QPoint b1 = reflect_in_point(b, a);
  if (!(between(b, a, b1) && congruent(m, a, b, a, b1) && congruent(m, o, b, o, b1) &&
        congruent(m, o, d, o, b)))
    return std::nullopt;
  if (!between(a, b, c)) return std::nullopt;                      // hypothesis Z(abc)
  if (!(between(o, d, c) || between(o, c, d))) return std::nullopt;  // hypothesis disjunction
  if (between(o, d, c)) return checked();
  return violation({"L3: Z(odc) fails although the hypothesis disjunction holds",
                    {wvar("o", o), wvar("a", a), wvar("b", b), wvar("b'", b1), wvar("c", c),
                     wvar("d", d)}});
}

inline FactTry fact_l4(const QModel& m, Rng& rng) {
  const QPoint o = sample_qpoint(rng), a = sample_qpoint(rng), c = sample_qpoint(rng);
  if (a == o || c == o || collinear(o, a, c)) return std::nullopt;
  const Rat mu(rng.range(1, 12), rng.range(1, 12)), nu(rng.range(1, 12), rng.range(1, 12));
  const QPoint b = o + (mu * (a - o)) + (nu * (c - o));
  if (b == o || !ray_between(o, a, c, b)) return std::nullopt;
  const auto prod = compose(line_reflection(m, line_through(o, c)),
                            compose(line_reflection(m, line_through(o, b)),
                                    line_reflection(m, line_through(o, a))));
  const auto dline = in_S(m, prod);
  if (!dline)
    return violation({"L4: three concurrent reflections do not compose to a reflection",
                      {wvar("o", o), wvar("a", a), wvar("b", b), wvar("c", c)}});
  if (!dline->contains(o))
    return violation({"L4: axis misses the pencil point",
                      {wvar("o", o), wvar("a", a), wvar("b", b), wvar("c", c), wvar("d", *dline)}});
  const QPoint e = line_dir(*dline);
  if (ray_between(o, a, c, o + e) || ray_between(o, a, c, o - e)) return checked();
  return violation({"L4: neither halfline of d lies between oa and oc",
                    {wvar("o", o), wvar("a", a), wvar("b", b), wvar("c", c), wvar("d", *dline)}});
}

}  // namespace detail

inline const std::vector<std::string>& fact_ids() {
  static const std::vector<std::string> ids = {"F1", "F4",  "F5",  "F6", "F7", "F8", "F10",
                                               "F11", "F12", "F13", "L1", "L2", "L3", "L4"};
  return ids;
}

/// n hypothesis-satisfying configurations per fact, each conclusion
/// decided exactly; degenerate draws are redrawn from the same stream, so
/// the report stays deterministic.
inline Report check_fact(const QModel& m, const std::string& id, long n, std::uint64_t seed) {
  using Gen = detail::FactTry (*)(const QModel&, Rng&);
  static const std::map<std::string, Gen> registry = {
      {"F1", detail::fact_f1},   {"F4", detail::fact_f4},   {"F5", detail::fact_f5},
      {"F6", detail::fact_f6},   {"F7", detail::fact_f7},   {"F8", detail::fact_f8},
      {"F10", detail::fact_f10}, {"F11", detail::fact_f11}, {"F12", detail::fact_f12},
      {"F13", detail::fact_f13}, {"L1", detail::fact_l1},   {"L2", detail::fact_l2},
      {"L3", detail::fact_l3},   {"L4", detail::fact_l4}};
  const auto it = registry.find(id);
  if (it == registry.end())
    throw std::invalid_argument("unknown fact id '" + id + "' (the register has F1,F4..F8,F10..F13,L1..L4)");
  const Gen gen = it->second;
  return detail::run_sampled("facts:" + id, m.descriptor(), n, seed,
                             [&m, gen](std::size_t, Rng& rng) -> detail::Outcome {
                               for (int attempt = 0; attempt < 1000; ++attempt) {
                                 if (auto out = gen(m, rng)) return std::move(*out);
                               }
                               return detail::gated();
                             });
}

}  // namespace weakgeo
