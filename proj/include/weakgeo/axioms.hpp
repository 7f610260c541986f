#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weakgeo/descriptor.hpp"
#include "weakgeo/motion.hpp"
#include "weakgeo/parallel.hpp"
#include "weakgeo/report.hpp"
#include "weakgeo/sampling.hpp"

namespace weakgeo {

enum class AxiomId {
  A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12, LOWDIM,
  H1, H2, H3, H4, H5,
};

inline std::string axiom_name(AxiomId id) {
  static const std::array<const char*, 18> names = {"A1", "A2", "A3", "A4",  "A5",  "A6",
                                                    "A7", "A8", "A9", "A10", "A11", "A12",
                                                    "LOWDIM", "H1", "H2", "H3", "H4", "H5"};
  return names[static_cast<std::size_t>(id)];
}

inline std::optional<AxiomId> parse_axiom(const std::string& s) {
  for (int i = 0; i < 18; ++i) {
    const auto id = static_cast<AxiomId>(i);
    if (axiom_name(id) == s) return id;
  }
  return std::nullopt;
}

/// A1-A4, A11 and A12 quantify over the betweenness relation
inline bool axiom_requires_ordered(AxiomId id) {
  switch (id) {
    case AxiomId::A1:
    case AxiomId::A2:
    case AxiomId::A3:
    case AxiomId::A4:
    case AxiomId::A11:
    case AxiomId::A12:
      return true;
    default:
      return false;
  }
}

inline bool axiom_is_hjelmslev(AxiomId id) {
  return id == AxiomId::H1 || id == AxiomId::H2 || id == AxiomId::H3 || id == AxiomId::H4 ||
         id == AxiomId::H5;
}

struct Budget {
  bool exhaustive = false;
  long samples = 10000;
  std::uint64_t seed = 0;
};

namespace detail {

struct Outcome {
  enum Kind { kChecked, kGated, kViolation, kWitness } kind = kChecked;
  Witness witness;
};

inline Outcome checked() { return {Outcome::kChecked, {}}; }
inline Outcome gated() { return {Outcome::kGated, {}}; }
inline Outcome violation(Witness w) { return {Outcome::kViolation, std::move(w)}; }

struct SampleLocal {
  long checked = 0, gated = 0;
  std::vector<Witness> violations;
  std::vector<Witness> witnesses;
};

inline void absorb(SampleLocal& acc, Outcome&& o) {
  switch (o.kind) {
    case Outcome::kChecked:
      ++acc.checked;
      break;
    case Outcome::kGated:
      ++acc.gated;
      break;
    case Outcome::kViolation:
      ++acc.checked;
      acc.violations.push_back(std::move(o.witness));
      break;
    case Outcome::kWitness:
      ++acc.checked;
      acc.witnesses.push_back(std::move(o.witness));
      break;
  }
}

template <class PerSample>
Report run_sampled(std::string command, std::string model, long n, std::uint64_t seed,
                   PerSample&& per_sample) {
  auto locals =
      run_chunked<SampleLocal>(static_cast<std::size_t>(n), [&](SampleLocal& acc, std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        absorb(acc, per_sample(i, rng));
      });
  Report r;
  r.command = std::move(command);
  r.model = std::move(model);
  r.mode = sampled_mode(n, seed);
  r.seed = seed;
  for (auto& loc : locals) {
    r.checked_count += loc.checked;
    r.gated_count += loc.gated;
    r.violations.insert(r.violations.end(), loc.violations.begin(), loc.violations.end());
    r.witnesses.insert(r.witnesses.end(), loc.witnesses.begin(), loc.witnesses.end());
  }
  return r;
}

// --------------------------------------------------------------------------
// shared algebraic cores (used by sampled and exhaustive modes alike)

/// A8 core: given lambda(abc) and ab = a'b', the unique candidate c' comes
/// from the linear consequence of the two norm equations; returns whether
/// existence and uniqueness hold.
template <Scalar F>
bool a8_transport_ok(const MetricModel<F>& m, const Point<F>& a, const Point<F>& b, const Point<F>& c,
                     const Point<F>& a1, const Point<F>& b1, Point<F>& c1_out) {
  const F d = norm(m, a1, b1);
  const F pn = norm(m, a, c), qn = norm(m, b, c);
  const F sc = (pn - qn + d) / (m.from_int(2) * d);
  c1_out = a1 + (sc * (b1 - a1));
  return strictly_collinear(a1, b1, c1_out) && norm(m, a1, c1_out) == pn && norm(m, b1, c1_out) == qn;
}

/// A10 core: the reflected point exists, satisfies both congruences, and
/// is the only solution besides x (the norm equations confine solutions to
/// x + span(dir), where the quadratic has roots exactly {0, s2}).
template <Scalar F>
bool a10_reflection_ok(const MetricModel<F>& m, const Point<F>& a, const Point<F>& b, const Point<F>& x,
                       Point<F>& x1_out) {
  const Line<F> l = line_through(a, b);
  x1_out = reflect_in_line(m, x, l);
  const Point<F> ab = b - a;
  const Point<F> dir{-(m.c() * ab.y), ab.x};
  const F s2 = -(m.from_int(2) * m.dot(x - a, dir)) / m.norm_vec(dir);
  const Point<F> y2 = x + (s2 * dir);
  return x1_out != x && congruent(m, a, x, a, x1_out) && congruent(m, b, x, b, x1_out) &&
         y2 == x1_out && !is_zero(s2);
}

// --------------------------------------------------------------------------
// sampled evaluators (ordered model)

inline Outcome axiom_a1(const QModel&, Rng& rng) {
  const QPoint a = sample_qpoint(rng), c = sample_qpoint(rng);
  if (a == c) return gated();
  const Rat t = rng.rat_unit_open();
  const QPoint b = t * a + ((Rat(1) - t) * c);
  if (!between(a, b, c)) return gated();
  if (between(c, b, a)) return checked();
  return violation({"Z(abc) -> Z(cba)", {wvar("a", a), wvar("b", b), wvar("c", c)}});
}

inline Outcome axiom_a2(const QModel&, Rng& rng) {
  const QPoint a = sample_qpoint(rng), c = sample_qpoint(rng);
  if (a == c) return gated();
  const Rat t = rng.rat_unit_open();
  const QPoint b = t * a + ((Rat(1) - t) * c);
  if (!between(a, b, c)) return gated();
  if (!between(a, c, b)) return checked();
  return violation({"Z(abc) -> not Z(acb)", {wvar("a", a), wvar("b", b), wvar("c", c)}});
}

inline Outcome axiom_a3(const QModel&, Rng& rng) {
  const QPoint a = sample_qpoint(rng), b = sample_qpoint(rng);
  if (a == b) return gated();
  const Rat s = rng.rat();
  if (s.is_zero() || s == 1) return gated();
  const QPoint c = a + (s * (b - a));
  QPoint d = b;
  if (rng.below(2) == 0) {
    const Rat r = rng.rat();
    if (r.is_zero() || r == 1) return gated();
    d = a + (r * (b - a));
  }
  if (!strictly_collinear(a, b, c)) return gated();
  if (d != b && !strictly_collinear(a, b, d)) return gated();
  if (strictly_collinear(c, d, a) || c == d) return checked();
  return violation({"lambda(abc) and (lambda(abd) or b=d) -> lambda(cda) or c=d",
                    {wvar("a", a), wvar("b", b), wvar("c", c), wvar("d", d)}});
}

inline Outcome axiom_a4_pasch(const QModel&, Rng& rng) {
  const QPoint a = sample_qpoint(rng), b = sample_qpoint(rng), c = sample_qpoint(rng);
  if (collinear(a, b, c)) return gated();
  const Rat t = rng.rat_unit_open();
  const QPoint d = t * a + ((Rat(1) - t) * b);
  const QPoint e = sample_qpoint(rng);
  if (collinear(a, b, e) || c == e || strictly_collinear(c, d, e)) return gated();
  const QLine secant = line_through(e, d);
  for (const auto& [u, v] : {std::pair<QPoint, QPoint>{a, c}, {b, c}}) {
    if (!meets_open_segment(secant, u, v)) continue;
    const auto f = intersect(secant, line_through(u, v));
    if (f && between(u, *f, v) && (strictly_collinear(e, d, *f) || *f == e)) return checked();
  }
  return violation({"Pasch: no exit point f",
                    {wvar("a", a), wvar("b", b), wvar("c", c), wvar("d", d), wvar("e", e)}});
}

template <Scalar F>
Outcome axiom_a5(const MetricModel<F>& m, Rng& rng) {
  const Point<F> a = sample_point(m, rng), b = sample_point(m, rng);
  const auto phi1 = sample_isometry(m, rng), phi2 = sample_isometry(m, rng);
  const Point<F> p = phi1.apply(a), q = phi1.apply(b);
  const Point<F> r = phi2.apply(a), s = phi2.apply(b);
  if (!congruent(m, a, b, p, q) || !congruent(m, a, b, r, s)) return gated();
  if (congruent(m, p, q, r, s)) return checked();
  return violation({"ab=pq and ab=rs -> pq=rs",
                    {wvar("a", a), wvar("b", b), wvar("p", p), wvar("q", q), wvar("r", r),
                     wvar("s", s)}});
}

template <Scalar F>
Outcome axiom_a6(const MetricModel<F>& m, Rng& rng) {
  const Point<F> c = sample_point(m, rng);
  Point<F> a = sample_point(m, rng), b = a;
  if (rng.below(2) == 0) b = sample_point(m, rng);
  if (!congruent(m, a, b, c, c)) return gated();
  if (a == b) return checked();
  return violation({"ab=cc -> a=b", {wvar("a", a), wvar("b", b), wvar("c", c)}});
}

template <Scalar F>
Outcome axiom_a7(const MetricModel<F>& m, Rng& rng) {
  const Point<F> a = sample_point(m, rng), b = sample_point(m, rng);
  if (congruent(m, a, b, b, a) && congruent(m, a, a, b, b)) return checked();
  return violation({"ab=ba and aa=bb", {wvar("a", a), wvar("b", b)}});
}

template <Scalar F>
Outcome axiom_a8(const MetricModel<F>& m, Rng& rng) {
  const Point<F> a = sample_point(m, rng), b = sample_point(m, rng);
  if (a == b) return gated();
  F s = m.from_int(0);
  if constexpr (is_ordered_field_v<F>) s = rng.rat();
  else s = rng.fp(m.prime());
  if (is_zero(s) || s == m.from_int(1)) return gated();
  const Point<F> c = a + (s * (b - a));
  const auto phi = sample_isometry(m, rng);
  const Point<F> a1 = phi.apply(a), b1 = phi.apply(b);
  if (!strictly_collinear(a, b, c) || !congruent(m, a, b, a1, b1)) return gated();
  Point<F> c1 = a1;
  if (a8_transport_ok(m, a, b, c, a1, b1, c1)) return checked();
  return violation({"transport: no unique c' with lambda(a'b'c'), ac=a'c', bc=b'c'",
                    {wvar("a", a), wvar("b", b), wvar("c", c), wvar("a'", a1), wvar("b'", b1),
                     wvar("c'", c1)}});
}

template <Scalar F>
Outcome axiom_a9(const MetricModel<F>& m, Rng& rng) {
  const Point<F> a = sample_point(m, rng), b = sample_point(m, rng);
  if (a == b) return gated();
  F s = m.from_int(0);
  if constexpr (is_ordered_field_v<F>) s = rng.rat();
  else s = rng.fp(m.prime());
  const Point<F> c = a + (s * (b - a));
  const Point<F> x = sample_point(m, rng);
  if (collinear(a, b, x)) return gated();
  const auto phi = sample_isometry(m, rng);
  const Point<F> a1 = phi.apply(a), b1 = phi.apply(b), c1 = phi.apply(c);
  Point<F> x1 = phi.apply(x);
  if (rng.below(2) == 0) x1 = reflect_in_line(m, x1, line_through(a1, b1));
  if (!(collinear(a1, b1, c1) && congruent(m, a, b, a1, b1) && congruent(m, b, c, b1, c1) &&
        congruent(m, a, c, a1, c1) && congruent(m, a, x, a1, x1) && congruent(m, b, x, b1, x1)))
    return gated();
  if (congruent(m, x, c, x1, c1)) return checked();
  return violation({"rigidity: xc = x'c'",
                    {wvar("a", a), wvar("b", b), wvar("c", c), wvar("x", x), wvar("a'", a1),
                     wvar("b'", b1), wvar("c'", c1), wvar("x'", x1)}});
}

template <Scalar F>
Outcome axiom_a10(const MetricModel<F>& m, Rng& rng) {
  const Point<F> a = sample_point(m, rng), b = sample_point(m, rng);
  const Point<F> x = sample_point(m, rng);
  if (a == b || collinear(a, b, x)) return gated();
  Point<F> x1 = x;
  if (a10_reflection_ok(m, a, b, x, x1)) return checked();
  return violation({"sigma: no unique x' != x with ax=ax', bx=bx'",
                    {wvar("a", a), wvar("b", b), wvar("x", x), wvar("x'", x1)}});
}

inline Outcome axiom_a11(const QModel& m, Rng& rng) {
  const QPoint a = sample_qpoint(rng), b = sample_qpoint(rng), x = sample_qpoint(rng);
  if (a == b || collinear(a, b, x)) return gated();
  const QLine l = line_through(a, b);
  const QPoint x1 = reflect_in_line(m, x, l);
  const QPoint y = foot(m, x, l);
  if (collinear(a, b, y) && between(x, y, x1)) return checked();
  return violation({"no y with L(aby) and Z(xyx')",
                    {wvar("a", a), wvar("b", b), wvar("x", x), wvar("x'", x1), wvar("y", y)}});
}

struct A12Instance {
  QPoint o, a, b, c, a1, b1;
  std::string failed_hypothesis;  // empty when every conjunct holds
  bool conclusion = false;
};

/// right-triangle configuration from seed (o, a, u): b sits on the
/// perpendicular at o to <o,a>, c is the foot of the altitude from o, and
/// the primed points are the point reflections the hypothesis names
inline std::optional<A12Instance> build_a12(const QModel& m, const QPoint& o, const QPoint& a,
                                            const Rat& u) {
  if (a == o || u.is_zero()) return std::nullopt;
  const QLine loa = line_through(o, a);
  const QPoint b = o + (u * perp_dir(m, loa));
  if (b == a || b == o) return std::nullopt;
  const QPoint c = foot(m, o, line_through(a, b));
  if (b == c) return std::nullopt;
  A12Instance inst;
  inst.o = o;
  inst.a = a;
  inst.b = b;
  inst.c = c;
  inst.a1 = reflect_in_point(a, o);
  inst.b1 = reflect_in_point(b, c);
  auto fail = [&](const char* name) {
    inst.failed_hypothesis = name;
    return std::optional<A12Instance>(inst);
  };
  if (!between(a, o, inst.a1)) return fail("Z(aoa')");
  if (!congruent(m, o, a, o, inst.a1)) return fail("oa=oa'");
  if (!congruent(m, b, a, b, inst.a1)) return fail("ba=ba'");
  if (o == b) return fail("o!=b");
  if (!strictly_collinear(a, b, c)) return fail("lambda(abc)");
  if (!between(b, c, inst.b1)) return fail("Z(bcb')");
  if (!congruent(m, c, b, c, inst.b1)) return fail("cb=cb'");
  if (!congruent(m, o, b, o, inst.b1)) return fail("ob=ob'");
  inst.conclusion = between(a, c, b);
  return inst;
}

inline Outcome axiom_a12(const QModel& m, std::size_t index, Rng& rng) {
  QPoint o{Rat(0), Rat(1)}, a{Rat(1), Rat(0)};
  Rat u(-1);
  if (index != 0) {  // index 0 pins the reference right triangle
    o = sample_qpoint(rng);
    a = sample_qpoint(rng);
    u = rng.rat();
  }
  const auto inst = build_a12(m, o, a, u);
  if (!inst || !inst->failed_hypothesis.empty()) return gated();
  if (inst->conclusion) return checked();
  return violation({"Z(acb)",
                    {wvar("o", inst->o), wvar("a", inst->a), wvar("b", inst->b), wvar("c", inst->c),
                     wvar("a'", inst->a1), wvar("b'", inst->b1)}});
}

template <Scalar F>
Outcome axiom_lowdim(const MetricModel<F>& m) {
  const Point<F> a = m.point(0, 0), b = m.point(1, 0), c = m.point(0, 1);
  if (!collinear(a, b, c))
    return Outcome{Outcome::kWitness, {"not L(abc)", {wvar("a", a), wvar("b", b), wvar("c", c)}}};
  return violation({"no non-collinear triple", {wvar("a", a), wvar("b", b), wvar("c", c)}});
}

// --------------------------------------------------------------------------
// exhaustive evaluators (finite model)

inline Report make_report(std::string command, const std::string& model, std::string mode) {
  Report r;
  r.command = std::move(command);
  r.model = model;
  r.mode = std::move(mode);
  return r;
}

inline std::map<std::int64_t, std::vector<std::pair<int, int>>> norm_classes(
    const MetricModel<Fp>& m, const std::vector<Point<Fp>>& pts) {
  std::map<std::int64_t, std::vector<std::pair<int, int>>> classes;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    for (int j = 0; j < static_cast<int>(pts.size()); ++j)
      classes[norm(m, pts[i], pts[j]).v].push_back({i, j});
  return classes;
}

inline Report exhaustive_a5(const MetricModel<Fp>& m) {
  Report r = make_report("axioms:A5", m.descriptor(), "exhaustive");
  const auto pts = all_points(m);
  for (const auto& [nv, pairs] : norm_classes(m, pts)) {
    (void)nv;
    for (const auto& ab : pairs)
      for (const auto& pq : pairs)
        for (const auto& rs : pairs) {
          ++r.checked_count;
          if (!congruent(m, pts[pq.first], pts[pq.second], pts[rs.first], pts[rs.second]))
            r.violations.push_back({"ab=pq and ab=rs -> pq=rs",
                                    {wvar("a", pts[ab.first]), wvar("b", pts[ab.second]),
                                     wvar("p", pts[pq.first]), wvar("q", pts[pq.second]),
                                     wvar("r", pts[rs.first]), wvar("s", pts[rs.second])}});
        }
  }
  return r;
}

inline Report exhaustive_a6(const MetricModel<Fp>& m) {
  Report r = make_report("axioms:A6", m.descriptor(), "exhaustive");
  const auto pts = all_points(m);
  for (const auto& a : pts)
    for (const auto& b : pts)
      for (const auto& c : pts) {
        if (!congruent(m, a, b, c, c)) {
          ++r.gated_count;
          continue;
        }
        ++r.checked_count;
        if (a != b) r.violations.push_back({"ab=cc -> a=b", {wvar("a", a), wvar("b", b), wvar("c", c)}});
      }
  return r;
}

inline Report exhaustive_a7(const MetricModel<Fp>& m) {
  Report r = make_report("axioms:A7", m.descriptor(), "exhaustive");
  const auto pts = all_points(m);
  for (const auto& a : pts)
    for (const auto& b : pts) {
      ++r.checked_count;
      if (!(congruent(m, a, b, b, a) && congruent(m, a, a, b, b)))
        r.violations.push_back({"ab=ba and aa=bb", {wvar("a", a), wvar("b", b)}});
    }
  return r;
}

inline Report exhaustive_a8(const MetricModel<Fp>& m) {
  Report r = make_report("axioms:A8", m.descriptor(), "exhaustive");
  const auto pts = all_points(m);
  const auto classes = norm_classes(m, pts);
  for (const auto& a : pts)
    for (const auto& b : pts) {
      if (a == b) continue;
      const auto& mates = classes.at(norm(m, a, b).v);
      for (std::int64_t sv = 2; sv < m.prime(); ++sv) {
        const Fp s(sv, m.prime());
        const Point<Fp> c = a + (s * (b - a));
        for (const auto& [i1, j1] : mates) {
          const Point<Fp>&a1 = pts[static_cast<std::size_t>(i1)], &b1 = pts[static_cast<std::size_t>(j1)];
          if (a1 == b1) continue;
          ++r.checked_count;
          Point<Fp> c1 = a1;
          if (!a8_transport_ok(m, a, b, c, a1, b1, c1))
            r.violations.push_back({"transport: no unique c'",
                                    {wvar("a", a), wvar("b", b), wvar("c", c), wvar("a'", a1),
                                     wvar("b'", b1), wvar("c'", c1)}});
        }
      }
    }
  return r;
}

inline Report exhaustive_a9(const MetricModel<Fp>& m) {
  Report r = make_report("axioms:A9", m.descriptor(), "exhaustive");
  const auto pts = all_points(m);
  const int n = static_cast<int>(pts.size());
  const auto classes = norm_classes(m, pts);
  // circle[i][nu]: indices of points at norm nu from pts[i]
  std::vector<std::vector<std::vector<int>>> circle(
      static_cast<std::size_t>(n), std::vector<std::vector<int>>(static_cast<std::size_t>(m.prime())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      circle[static_cast<std::size_t>(i)][static_cast<std::size_t>(norm(m, pts[i], pts[j]).v)].push_back(j);

  auto locals = run_chunked<SampleLocal>(static_cast<std::size_t>(n * n), [&](SampleLocal& acc,
                                                                              std::size_t abi) {
    const int ai = static_cast<int>(abi) / n, bi = static_cast<int>(abi) % n;
    const Point<Fp>&a = pts[static_cast<std::size_t>(ai)], &b = pts[static_cast<std::size_t>(bi)];
    if (a == b) return;
    const auto& mates = classes.at(norm(m, a, b).v);
    for (const auto& c : pts) {
      if (!collinear(a, b, c)) continue;
      for (const auto& x : pts) {
        if (collinear(a, b, x)) continue;
        const std::int64_t nac = norm(m, a, c).v, nbc = norm(m, b, c).v;
        const std::int64_t nax = norm(m, a, x).v, nbx = norm(m, b, x).v;
        const std::int64_t nxc = norm(m, x, c).v;
        for (const auto& [i1, j1] : mates) {
          const Point<Fp>&a1 = pts[static_cast<std::size_t>(i1)], &b1 = pts[static_cast<std::size_t>(j1)];
          for (int ci : circle[static_cast<std::size_t>(i1)][static_cast<std::size_t>(nac)]) {
            const Point<Fp>& c1 = pts[static_cast<std::size_t>(ci)];
            if (norm(m, b1, c1).v != nbc || !collinear(a1, b1, c1)) continue;
            for (int xi : circle[static_cast<std::size_t>(i1)][static_cast<std::size_t>(nax)]) {
              const Point<Fp>& x1 = pts[static_cast<std::size_t>(xi)];
              if (norm(m, b1, x1).v != nbx) continue;
              ++acc.checked;
              if (norm(m, x1, c1).v != nxc)
                acc.violations.push_back({"rigidity: xc = x'c'",
                                          {wvar("a", a), wvar("b", b), wvar("c", c), wvar("x", x),
                                           wvar("a'", a1), wvar("b'", b1), wvar("c'", c1),
                                           wvar("x'", x1)}});
            }
          }
        }
      }
    }
  });
  for (auto& loc : locals) {
    r.checked_count += loc.checked;
    r.gated_count += loc.gated;
    r.violations.insert(r.violations.end(), loc.violations.begin(), loc.violations.end());
  }
  return r;
}

inline Report exhaustive_a10(const MetricModel<Fp>& m) {
  Report r = make_report("axioms:A10", m.descriptor(), "exhaustive");
  const auto pts = all_points(m);
  for (const auto& a : pts)
    for (const auto& b : pts) {
      if (a == b) continue;
      for (const auto& x : pts) {
        if (collinear(a, b, x)) continue;
        ++r.checked_count;
        Point<Fp> x1 = x;
        if (!a10_reflection_ok(m, a, b, x, x1))
          r.violations.push_back({"sigma: no unique x'",
                                  {wvar("a", a), wvar("b", b), wvar("x", x), wvar("x'", x1)}});
      }
    }
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hjelmslev axioms, evaluated through the literal stroke relation

namespace detail {

struct StrokeTables {
  std::vector<Point<Fp>> points;
  std::vector<Line<Fp>> lines;
  std::vector<Motion<Fp>> prefl, srefl;
  std::vector<std::vector<char>> inc;       // stroke(rho_P, sigma_l)
  std::vector<std::vector<char>> perp;      // stroke(sigma_a, sigma_b)
};

inline StrokeTables build_stroke_tables(const MetricModel<Fp>& m) {
  StrokeTables t;
  t.points = all_points(m);
  t.lines = all_lines(m);
  for (const auto& p : t.points) t.prefl.push_back(point_reflection(m, p));
  for (const auto& l : t.lines) t.srefl.push_back(line_reflection(m, l));
  t.inc.assign(t.points.size(), std::vector<char>(t.lines.size(), 0));
  for (std::size_t i = 0; i < t.points.size(); ++i)
    for (std::size_t j = 0; j < t.lines.size(); ++j)
      t.inc[i][j] = stroke(m, t.prefl[i], t.srefl[j]) ? 1 : 0;
  t.perp.assign(t.lines.size(), std::vector<char>(t.lines.size(), 0));
  for (std::size_t i = 0; i < t.lines.size(); ++i)
    for (std::size_t j = 0; j < t.lines.size(); ++j)
      t.perp[i][j] = stroke(m, t.srefl[i], t.srefl[j]) ? 1 : 0;
  return t;
}

}  // namespace detail

inline Report check_hjelmslev(const MetricModel<Fp>& m, AxiomId id) {
  if (!axiom_is_hjelmslev(id))
    throw std::invalid_argument(axiom_name(id) + " is not one of H1..H5");
  const auto t = detail::build_stroke_tables(m);
  Report r = detail::make_report("hjelmslev:" + axiom_name(id), m.descriptor(), "exhaustive");
  const std::size_t np = t.points.size(), nl = t.lines.size();
  switch (id) {
    case AxiomId::H1:  // for A, b there exists c with A, b | c
      for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = 0; b < nl; ++b) {
          ++r.checked_count;
          bool found = false;
          for (std::size_t c = 0; c < nl && !found; ++c)
            if (t.inc[a][c] && t.perp[b][c]) found = true;
          if (!found)
            r.violations.push_back({"H1: no common stroke line",
                                    {wvar("A", t.points[a]), wvar("b", t.lines[b])}});
        }
      break;
    case AxiomId::H2:  // A, B | c, d -> A = B or c = d
      for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = 0; b < np; ++b)
          for (std::size_t c = 0; c < nl; ++c) {
            if (!t.inc[a][c] || !t.inc[b][c]) continue;
            for (std::size_t d = 0; d < nl; ++d) {
              if (!t.inc[a][d] || !t.inc[b][d]) continue;
              ++r.checked_count;
              if (!(a == b || c == d))
                r.violations.push_back({"H2: two points on two joining lines",
                                        {wvar("A", t.points[a]), wvar("B", t.points[b]),
                                         wvar("c", t.lines[c]), wvar("d", t.lines[d])}});
            }
          }
      break;
    case AxiomId::H3:  // a, b, c | e -> abc in S
      for (std::size_t e = 0; e < nl; ++e)
        for (std::size_t a = 0; a < nl; ++a) {
          if (!t.perp[a][e]) continue;
          for (std::size_t b = 0; b < nl; ++b) {
            if (!t.perp[b][e]) continue;
            for (std::size_t c = 0; c < nl; ++c) {
              if (!t.perp[c][e]) continue;
              ++r.checked_count;
              const auto prod = compose(t.srefl[a], compose(t.srefl[b], t.srefl[c]));
              if (!in_S(m, prod))
                r.violations.push_back({"H3: product of three reflections not in S",
                                        {wvar("a", t.lines[a]), wvar("b", t.lines[b]),
                                         wvar("c", t.lines[c]), wvar("e", t.lines[e])}});
            }
          }
        }
      break;
    case AxiomId::H4:  // a, b, c | E -> abc in S
      for (std::size_t e = 0; e < np; ++e)
        for (std::size_t a = 0; a < nl; ++a) {
          if (!t.inc[e][a]) continue;
          for (std::size_t b = 0; b < nl; ++b) {
            if (!t.inc[e][b]) continue;
            for (std::size_t c = 0; c < nl; ++c) {
              if (!t.inc[e][c]) continue;
              ++r.checked_count;
              const auto prod = compose(t.srefl[a], compose(t.srefl[b], t.srefl[c]));
              if (!in_S(m, prod))
                r.violations.push_back({"H4: product of three reflections not in S",
                                        {wvar("a", t.lines[a]), wvar("b", t.lines[b]),
                                         wvar("c", t.lines[c]), wvar("E", t.points[e])}});
            }
          }
        }
      break;
    case AxiomId::H5:  // there exist a, b with a | b
      for (std::size_t a = 0; a < nl && r.witnesses.empty(); ++a)
        for (std::size_t b = 0; b < nl && r.witnesses.empty(); ++b)
          if (t.perp[a][b]) {
            r.witnesses.push_back({"H5: a | b", {wvar("a", t.lines[a]), wvar("b", t.lines[b])}});
            r.checked_count = 1;
          }
      if (r.witnesses.empty()) {
        r.checked_count = 1;
        r.violations.push_back({"H5: no perpendicular pair of lines", {}});
      }
      break;
    default:
      break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// public entry points

inline Report check_axiom(const QModel& m, AxiomId id, const Budget& budget) {
  if (axiom_is_hjelmslev(id))
    throw std::invalid_argument(axiom_name(id) + " requires a finite model");
  if (budget.exhaustive)
    throw std::invalid_argument("exhaustive mode requires a finite model");
  const std::string command = "axioms:" + axiom_name(id);
  const long n = budget.samples;
  const std::uint64_t seed = budget.seed;
  using detail::Outcome;
  auto dispatch = [&](std::size_t i, Rng& rng) -> Outcome {
    switch (id) {
      case AxiomId::A1: return detail::axiom_a1(m, rng);
      case AxiomId::A2: return detail::axiom_a2(m, rng);
      case AxiomId::A3: return detail::axiom_a3(m, rng);
      case AxiomId::A4: return detail::axiom_a4_pasch(m, rng);
      case AxiomId::A5: return detail::axiom_a5(m, rng);
      case AxiomId::A6: return detail::axiom_a6(m, rng);
      case AxiomId::A7: return detail::axiom_a7(m, rng);
      case AxiomId::A8: return detail::axiom_a8(m, rng);
      case AxiomId::A9: return detail::axiom_a9(m, rng);
      case AxiomId::A10: return detail::axiom_a10(m, rng);
      case AxiomId::A11: return detail::axiom_a11(m, rng);
      case AxiomId::A12: return detail::axiom_a12(m, i, rng);
      case AxiomId::LOWDIM: return detail::axiom_lowdim(m);
      default: return detail::gated();
    }
  };
  if (id == AxiomId::LOWDIM)
    return detail::run_sampled(command, m.descriptor(), 1, seed, dispatch);
  return detail::run_sampled(command, m.descriptor(), n, seed, dispatch);
}

inline Report check_axiom(const MetricModel<Fp>& m, AxiomId id, const Budget& budget) {
  if (axiom_requires_ordered(id))
    throw std::invalid_argument(axiom_name(id) + ": order undefined on a finite model");
  if (axiom_is_hjelmslev(id)) return check_hjelmslev(m, id);
  if (!budget.exhaustive && id != AxiomId::LOWDIM)
    throw std::invalid_argument("finite models are checked exhaustively");
  switch (id) {
    case AxiomId::A5: return detail::exhaustive_a5(m);
    case AxiomId::A6: return detail::exhaustive_a6(m);
    case AxiomId::A7: return detail::exhaustive_a7(m);
    case AxiomId::A8: return detail::exhaustive_a8(m);
    case AxiomId::A9: return detail::exhaustive_a9(m);
    case AxiomId::A10: return detail::exhaustive_a10(m);
    case AxiomId::LOWDIM: {
      Report r = detail::make_report("axioms:LOWDIM", m.descriptor(), "exhaustive");
      detail::SampleLocal acc;
      detail::absorb(acc, detail::axiom_lowdim(m));
      r.checked_count = acc.checked;
      r.violations = acc.violations;
      r.witnesses = acc.witnesses;
      return r;
    }
    default:
      throw std::invalid_argument(axiom_name(id) + ": unsupported finite-model check");
  }
}

/// Deterministic reproduction of the reference A12 failure in (Q, c=-2):
/// the fixed right triangle o=(0,1), a=(1,0), b=(2,0) whose altitude foot
/// (0,0) misses the open segment ab. On models where some hypothesis
/// conjunct fails instead (say c=1), the report carries the mismatch.
inline Report repro_a12(const QModel& m = make_q_model(Rat(-2))) {
  Report r = detail::make_report("repro:a12", m.descriptor(), "exhaustive");
  const QPoint o{Rat(0), Rat(1)}, a{Rat(1), Rat(0)}, b{Rat(2), Rat(0)};
  const QLine loa = line_through(o, a), lob = line_through(o, b);
  if (!perpendicular(m, loa, lob)) {
    r.gated_count = 1;
    r.witnesses.push_back({"hypothesis mismatch: <o,a> not perpendicular to <o,b>",
                           {wvar("<o,a>", loa), wvar("<o,b>", lob)}});
    return r;
  }
  const QPoint c = foot(m, o, line_through(a, b));
  const QPoint a1 = reflect_in_point(a, o), b1 = reflect_in_point(b, c);
  const std::array<std::pair<const char*, bool>, 8> conjuncts = {
      std::pair<const char*, bool>{"Z(aoa')", between(a, o, a1)},
      {"oa=oa'", congruent(m, o, a, o, a1)},
      {"ba=ba'", congruent(m, b, a, b, a1)},
      {"o!=b", o != b},
      {"lambda(abc)", strictly_collinear(a, b, c)},
      {"Z(bcb')", between(b, c, b1)},
      {"cb=cb'", congruent(m, c, b, c, b1)},
      {"ob=ob'", congruent(m, o, b, o, b1)},
  };
  for (const auto& [name, holds] : conjuncts) {
    if (!holds) {
      r.gated_count = 1;
      r.witnesses.push_back({std::string("hypothesis mismatch: ") + name,
                             {wvar("o", o), wvar("a", a), wvar("b", b), wvar("c", c)}});
      return r;
    }
  }
  r.checked_count = 1;
  if (!between(a, c, b)) {
    r.violations.push_back({"Z(acb) fails",
                            {wvar("o", o), wvar("a", a), wvar("b", b), wvar("c", c), wvar("a'", a1),
                             wvar("b'", b1), wvar("<o,a>", loa), wvar("<o,b>", lob)}});
  }
  return r;
}

}  // namespace weakgeo
