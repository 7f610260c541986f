#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weakgeo/axioms.hpp"
#include "weakgeo/ratfunc.hpp"
#include "weakgeo/roots.hpp"

namespace weakgeo {

// ---------------------------------------------------------------------------
// generalized Steiner-Lehmus machinery (ordered models)

struct SLConfig {
  QPoint a, b, c, m, n, s, d, p, o;
  Rat t;
};

struct Verdict {
  enum Kind { kHypothesisFailed, kConclusionHolds, kCounterexample } kind = kConclusionHolds;
  std::string conjunct;  // named failing conjunct for kHypothesisFailed
};

/// Evaluate every hypothesis conjunct of the cevian statement by name, in
/// order, then the conclusion.
inline Verdict check_sl_instance(const QModel& m, const SLConfig& cfg) {
  const auto fail = [](const char* name) { return Verdict{Verdict::kHypothesisFailed, name}; };
  if (collinear(cfg.a, cfg.b, cfg.c)) return fail("not L(abc)");
  if (!between(cfg.a, cfg.m, cfg.c)) return fail("Z(amc)");
  if (!between(cfg.a, cfg.n, cfg.b)) return fail("Z(anb)");
  if (!(congruent(m, cfg.a, cfg.d, cfg.a, cfg.b) &&
        (between(cfg.a, cfg.d, cfg.c) || between(cfg.a, cfg.c, cfg.d) || cfg.d == cfg.c)))
    return fail("ad=ab and (Z(adc) or Z(acd) or d=c)");
  if (!congruent(m, cfg.s, cfg.b, cfg.s, cfg.d)) return fail("sb=sd");
  if (!between(cfg.b, cfg.s, cfg.m)) return fail("Z(bsm)");
  if (!between(cfg.c, cfg.s, cfg.n)) return fail("Z(csn)");
  if (!congruent(m, cfg.b, cfg.m, cfg.c, cfg.n)) return fail("bm=cn");
  if (!(between(cfg.m, cfg.p, cfg.n) && congruent(m, cfg.p, cfg.m, cfg.p, cfg.n)))
    return fail("M(mpn)");
  if (!(between(cfg.b, cfg.o, cfg.c) && congruent(m, cfg.o, cfg.b, cfg.o, cfg.c)))
    return fail("M(boc)");
  if (congruent(m, cfg.a, cfg.b, cfg.a, cfg.c)) return {Verdict::kConclusionHolds, {}};
  return {Verdict::kCounterexample, {}};
}

struct SLSeed {
  QPoint a;
  QPoint b;
  QLine bisector;  // through a; the internal bisector of the angle at a
  Rat s_param;     // position of the cevian crossing s along the bisector
};

/// Outcome of deciding one real root of the fiber polynomial.
struct SLRootClass {
  Verdict verdict;
  RootInterval iso;
};

/// One-parameter family c(t) = a + t (sigma(b) - a). Built bisector-first:
/// the internal bisector at a exists by construction, the transported
/// point d = sigma(b) is rational, and sb = sd holds identically, so the
/// only t-dependent hypotheses are polynomial sign conditions.
class SLFamily {
 public:
  SLFamily(const QModel& model, const SLSeed& seed) : c_(model.c()), seed_(seed) {
    const QPoint&a = seed.a, &b = seed.b;
    if (!seed.bisector.contains(a)) throw std::invalid_argument("sl family: bisector must pass through a");
    if (seed.bisector.contains(b)) throw std::invalid_argument("sl family: b on bisector");
    d_ = reflect_in_line(model, b, seed.bisector);
    if (collinear(a, b, d_)) throw std::invalid_argument("sl family: reflected leg collinear with ab");
    if (!(seed.s_param > 0)) throw std::invalid_argument("sl family: s_param must be positive");
    const QPoint interior = (b - a) + (d_ - a);
    s_ = a + ((seed.s_param / Rat(2)) * interior);
    if (s_ == a || !angle_interior(a, b, d_, s_))
      throw std::invalid_argument("sl family: s outside the angle");
    const auto m0 = intersect(line_through(b, s_), line_through(a, d_));
    if (!m0) throw std::invalid_argument("sl family: cevian through s parallel to the far leg");
    m_ = *m0;
    if (m_ == b || s_ == m_ || !between(b, s_, m_))
      throw std::invalid_argument("sl family: s outside (cevian order)");
    if (norm(model, a, d_) != norm(model, a, b) || norm(model, s_, b) != norm(model, s_, d_))
      throw std::logic_error("sl family: reflection identities failed");

    const RatFunc t = RatFunc::var();
    auto cpt = [](const QPoint& p) { return RFPoint{RatFunc(p.x), RatFunc(p.y)}; };
    c_t_ = cpt(a) + (t * cpt(d_ - a));
    const RFLine cs = rf_line_through(c_t_, cpt(s_));
    const RFLine ab = rf_line_through(cpt(a), cpt(b));
    auto [n_t, det_n] = rf_intersect(cs, ab);
    n_t_ = n_t;
    fiber_ = RatFunc(norm(model, m_, b)) - rf_norm(c_, n_t_ - c_t_);
    conclusion_ = RatFunc(norm(model, a, b)) - rf_norm(c_, c_t_ - cpt(a));
    if (const auto at1 = fiber_.eval(Rat(1)); !at1 || !at1->is_zero())
      throw std::logic_error("sl family: fiber does not vanish at the symmetric parameter");

    auto sq = [](const RatFunc& q) { return q * q; };
    auto sumsq = [](const RFPoint& v) { return v.x * v.x + v.y * v.y; };
    conditions_.push_back({"not L(abc)", sq(rf_cross(cpt(b - a), c_t_ - cpt(a)))});
    conditions_.push_back({"construction:n", sq(det_n)});
    conditions_.push_back({"Z(amc)", rf_dot(cpt(m_ - a), c_t_ - cpt(m_))});
    conditions_.push_back({"Z(anb)", rf_dot(n_t_ - cpt(a), cpt(b) - n_t_)});
    conditions_.push_back({"ad=ab and (Z(adc) or Z(acd) or d=c)", t});
    conditions_.push_back({"Z(csn)", rf_dot(cpt(s_) - c_t_, n_t_ - cpt(s_))});
    conditions_.push_back({"M(mpn)", sumsq(cpt(m_) - n_t_)});
    conditions_.push_back({"M(boc)", sumsq(cpt(b) - c_t_)});
  }

  const Poly& fiber_numerator() const { return fiber_.num(); }
  const RatFunc& fiber() const { return fiber_; }
  const QPoint& transported_point() const { return d_; }
  const QPoint& crossing() const { return s_; }
  const QPoint& cevian_foot_m() const { return m_; }

  /// concrete rational configuration at parameter t
  std::optional<SLConfig> instantiate(const Rat& t) const {
    const QPoint a = seed_.a, b = seed_.b;
    const QPoint c = a + (t * (d_ - a));
    if (c == a || c == b || collinear(a, b, c)) return std::nullopt;
    if (c == s_) return std::nullopt;
    const auto n = intersect(line_through(c, s_), line_through(a, b));
    if (!n) return std::nullopt;
    if (m_ == *n || b == c) return std::nullopt;
    SLConfig cfg;
    cfg.a = a;
    cfg.b = b;
    cfg.c = c;
    cfg.m = m_;
    cfg.n = *n;
    cfg.s = s_;
    cfg.d = d_;
    cfg.p = midpoint(m_, *n);
    cfg.o = midpoint(b, c);
    cfg.t = t;
    return cfg;
  }

  /// exact sign classification of one isolated root of the fiber numerator
  SLRootClass classify_root(const RootInterval& iso) const {
    auto sign_of = [&](const RatFunc& q) -> std::optional<int> {
      if (iso.is_point()) {
        const auto v = q.eval(iso.lo);
        if (!v) return std::nullopt;
        return v->sign();
      }
      const int sden = refine_to_sign(fiber_.num(), q.den(), iso);
      if (sden == 0) return std::nullopt;
      return refine_to_sign(fiber_.num(), q.num(), iso) * sden;
    };
    for (const auto& cond : conditions_) {
      const auto s = sign_of(cond.q);
      if (!s || *s <= 0) return {{Verdict::kHypothesisFailed, cond.name}, iso};
    }
    const auto sc = sign_of(conclusion_);
    if (sc && *sc == 0) return {{Verdict::kConclusionHolds, {}}, iso};
    return {{Verdict::kCounterexample, {}}, iso};
  }

  Witness counterexample_witness(const RootInterval& iso) const {
    Witness w;
    w.note = "all hypotheses hold at the root, ab=ac fails";
    w.vars = {wvar("a", seed_.a),       wvar("b", seed_.b), wvar("bisector", seed_.bisector),
              wvar("s_param", seed_.s_param), wvar("s", s_),  wvar("d", d_),
              wvar("m", m_),            wvar("t_lo", iso.lo), wvar("t_hi", iso.hi)};
    return w;
  }

 private:
  struct Condition {
    std::string name;
    RatFunc q;  // strictly positive at every admissible root
  };

  Rat c_;
  SLSeed seed_;
  QPoint d_, s_, m_;
  RFPoint c_t_, n_t_;
  RatFunc fiber_, conclusion_;
  std::vector<Condition> conditions_;
};

inline SLFamily build_sl_family(const QModel& model, const SLSeed& seed) { return SLFamily(model, seed); }

/// Seeded falsification sweep: sample families, isolate every real root of
/// each fiber numerator, and decide each root exactly. Roots failing a
/// named hypothesis count as gated; conclusion-holding roots as checked;
/// anything else is a counterexample.
inline Report sl_falsification_search(const QModel& model, long n_families, std::uint64_t seed) {
  auto locals = run_chunked<detail::SampleLocal>(
      static_cast<std::size_t>(n_families), [&](detail::SampleLocal& acc, std::size_t i) {
        Rng rng = Rng::stream(seed, i);
        const QPoint a = sample_qpoint(rng);
        QPoint z = sample_qpoint(rng);
        if (z == a) {
          ++acc.gated;
          return;
        }
        const SLSeed fam_seed{a, sample_qpoint(rng), line_through(a, z),
                              Rat(rng.range(1, 12), rng.range(1, 12))};
        std::optional<SLFamily> fam;
        try {
          fam.emplace(model, fam_seed);
        } catch (const std::invalid_argument&) {
          ++acc.gated;
          return;
        }
        if (fam->fiber_numerator().is_zero()) {
          // the fiber vanishes identically: every parameter satisfies
          // bm=cn, so spot-check rational instances directly
          for (const long num : {2L, 3L, 5L}) {
            const auto cfg = fam->instantiate(Rat(num, 1));
            if (!cfg) {
              ++acc.gated;
              continue;
            }
            const Verdict v = check_sl_instance(model, *cfg);
            if (v.kind == Verdict::kCounterexample) {
              ++acc.checked;
              Witness w = fam->counterexample_witness({cfg->t, cfg->t});
              w.note = "identically vanishing fiber: " + w.note;
              acc.violations.push_back(std::move(w));
            } else if (v.kind == Verdict::kConclusionHolds) {
              ++acc.checked;
            } else {
              ++acc.gated;
            }
          }
          return;
        }
        for (const auto& iso : sturm_isolate(fam->fiber_numerator())) {
          const SLRootClass rc = fam->classify_root(iso);
          switch (rc.verdict.kind) {
            case Verdict::kHypothesisFailed:
              ++acc.gated;
              break;
            case Verdict::kConclusionHolds:
              ++acc.checked;
              break;
            case Verdict::kCounterexample:
              ++acc.checked;
              acc.violations.push_back(fam->counterexample_witness(iso));
              break;
          }
        }
      });
  Report r = detail::make_report("theorem:sl-general", model.descriptor(),
                                 sampled_mode(n_families, seed));
  r.seed = seed;
  for (auto& loc : locals) {
    r.checked_count += loc.checked;
    r.gated_count += loc.gated;
    r.violations.insert(r.violations.end(), loc.violations.begin(), loc.violations.end());
  }
  return r;
}

// ---------------------------------------------------------------------------
// congruent medians (finite models)

/// Exhaustive sweep over non-collinear ordered triples: U, W are the side
/// midpoints; on AU = CW the conclusion (a line v through B with A^v = C)
/// is both decided as BA = BC and exhibited constructively. The proof's
/// pivot identity U^v = W and the impossibility of the U^v = W^h branch
/// are checked on every hit.
inline Report check_medians(const MetricModel<Fp>& m, bool exclude_char3_guard = true) {
  if (exclude_char3_guard && m.prime() == 3)
    throw std::invalid_argument("medians: characteristic 3 excluded by hypothesis (disable the guard)");
  const auto pts = all_points(m);
  const int n = static_cast<int>(pts.size());
  auto locals = run_chunked<detail::SampleLocal>(static_cast<std::size_t>(n), [&](detail::SampleLocal&
                                                                                      acc,
                                                                                  std::size_t ai) {
    const Point<Fp>& a = pts[ai];
    for (const auto& b : pts) {
      if (b == a) continue;
      for (const auto& c : pts) {
        if (c == a || c == b || collinear(a, b, c)) continue;
        const Point<Fp> u = midpoint(b, c), w = midpoint(a, b);
        if (reflect_in_point(c, u) != b || reflect_in_point(b, w) != a) {
          acc.violations.push_back({"midpoint reading C^U=B, B^W=A failed",
                                    {wvar("A", a), wvar("B", b), wvar("C", c)}});
          continue;
        }
        if (norm(m, a, u) != norm(m, c, w)) {
          ++acc.gated;
          continue;
        }
        ++acc.checked;
        const bool isosceles = norm(m, b, a) == norm(m, b, c);
        const Line<Fp> v = perp_bisector(m, a, c);
        const bool v_through_b = v.contains(b);
        if (v_through_b != isosceles) {
          acc.violations.push_back({"conclusion inconsistency: v through B vs BA=BC",
                                    {wvar("A", a), wvar("B", b), wvar("C", c), wvar("v", v)}});
          continue;
        }
        if (!isosceles) {
          acc.violations.push_back({"AU=CW but BA!=BC",
                                    {wvar("A", a), wvar("B", b), wvar("C", c), wvar("U", u),
                                     wvar("W", w)}});
          continue;
        }
        // pivot identity of the proof
        const Point<Fp> uv = reflect_in_line(m, u, v);
        if (uv != w) {
          acc.violations.push_back({"pivot identity U^v = W failed",
                                    {wvar("A", a), wvar("B", b), wvar("C", c), wvar("U", u),
                                     wvar("W", w), wvar("v", v)}});
          continue;
        }
        if (u != w) {
          const Line<Fp> s = line_through(u, w);
          const Point<Fp> fc = foot(m, c, s);
          const Line<Fp> h = fc == c ? perpendicular_at(m, s, c) : line_through(c, fc);
          const Point<Fp> wh = reflect_in_line(m, w, h);
          if (uv == wh && wh != w) {
            acc.violations.push_back({"forbidden branch U^v = W^h with W^h != W",
                                      {wvar("A", a), wvar("B", b), wvar("C", c)}});
          }
        }
      }
    }
  });
  Report r = detail::make_report("theorem:medians", m.descriptor(), "exhaustive");
  for (auto& loc : locals) {
    r.checked_count += loc.checked;
    r.gated_count += loc.gated;
    r.violations.insert(r.violations.end(), loc.violations.begin(), loc.violations.end());
  }
  return r;
}

/// at most one point V != W on s with CW = CV, given C,W | n, W | s, C not on s
inline Report check_median_uniqueness_lemma(const MetricModel<Fp>& m) {
  Report r = detail::make_report("theorem:median-uniqueness", m.descriptor(), "exhaustive");
  const auto pts = all_points(m);
  const auto lines = all_lines(m);
  for (const auto& c : pts)
    for (const auto& w : pts) {
      if (c == w) continue;
      for (const auto& s : lines) {
        if (!s.contains(w) || s.contains(c)) continue;
        ++r.checked_count;
        int count = 0;
        Point<Fp> other = w;
        for (const auto& v : pts)
          if (s.contains(v) && norm(m, c, w) == norm(m, c, v)) {
            ++count;
            if (v != w) other = v;
          }
        if (count > 2)
          r.violations.push_back({"more than one V != W with CW=CV",
                                  {wvar("C", c), wvar("W", w), wvar("s", s), wvar("V", other)}});
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// order-free bisector theory (finite models)

/// all lines g through `a` whose reflection maps <a,b> onto <a,c>
inline std::vector<Line<Fp>> bisector_lines_at(const MetricModel<Fp>& m, const Point<Fp>& a,
                                               const Point<Fp>& b, const Point<Fp>& c,
                                               const std::vector<Line<Fp>>& lines) {
  std::vector<Line<Fp>> out;
  const Line<Fp> ac = line_through(a, c);
  for (const auto& g : lines) {
    if (!g.contains(a)) continue;
    const Point<Fp> b1 = reflect_in_line(m, b, g);  // b1 != a since reflections fix only g
    if (line_through(a, b1) == ac) out.push_back(g);
  }
  return out;
}

inline bool concurrent(const Line<Fp>& l1, const Line<Fp>& l2, const Line<Fp>& l3) {
  if (l1 == l2) return l2 == l3 || intersect(l2, l3).has_value();
  const auto x = intersect(l1, l2);
  return x && l3.contains(*x);
}

/// Theorem on triangles in the order-free setting: (a) concurrent bisector
/// triples with AM = BM force CA = CB; (b) bisector-triangle UVW isosceles
/// at W forces CA = CB.
inline Report check_orderfree_sl(const MetricModel<Fp>& m) {
  const auto pts = all_points(m);
  const auto lines = all_lines(m);
  const int n = static_cast<int>(pts.size());
  auto locals = run_chunked<detail::SampleLocal>(static_cast<std::size_t>(n), [&](detail::SampleLocal&
                                                                                      acc,
                                                                                  std::size_t ai) {
    const Point<Fp>& a = pts[ai];
    for (const auto& b : pts) {
      if (b == a) continue;
      for (const auto& c : pts) {
        if (c == a || c == b || collinear(a, b, c)) continue;
        const auto bis_a = bisector_lines_at(m, a, b, c, lines);
        const auto bis_b = bisector_lines_at(m, b, c, a, lines);
        const auto bis_c = bisector_lines_at(m, c, a, b, lines);
        if (bis_a.empty() || bis_b.empty() || bis_c.empty()) {
          ++acc.gated;  // not every vertex is bisectable
          continue;
        }
        for (const auto& u : bis_a)
          for (const auto& v : bis_b)
            for (const auto& w : bis_c) {
              if (concurrent(u, v, w)) {
                std::optional<Point<Fp>> mm = intersect(u, v);
                if (!mm) mm = intersect(u, w);
                if (!mm) mm = intersect(v, w);
                if (!mm) {
                  ++acc.gated;
                  continue;
                }
                if (norm(m, a, *mm) != norm(m, b, *mm)) {
                  ++acc.gated;
                  continue;
                }
                ++acc.checked;
                if (norm(m, c, a) != norm(m, c, b))
                  acc.violations.push_back({"(a) concurrent, AM=BM, but CA!=CB",
                                            {wvar("A", a), wvar("B", b), wvar("C", c),
                                             wvar("u", u), wvar("v", v), wvar("w", w),
                                             wvar("M", *mm)}});
                continue;
              }
              const auto bu = intersect(v, w), bv = intersect(u, w), bw = intersect(u, v);
              if (!bu || !bv || !bw) {
                ++acc.gated;
                continue;
              }
              if (*bu == *bv || *bv == *bw || *bw == *bu || collinear(*bu, *bv, *bw)) {
                ++acc.gated;
                continue;
              }
              if (norm(m, *bu, *bw) != norm(m, *bv, *bw)) {
                ++acc.gated;
                continue;
              }
              ++acc.checked;
              if (norm(m, c, a) != norm(m, c, b))
                acc.violations.push_back({"(b) UVW isosceles at W, but CA!=CB",
                                          {wvar("A", a), wvar("B", b), wvar("C", c), wvar("U", *bu),
                                           wvar("V", *bv), wvar("W", *bw)}});
            }
      }
    }
  });
  Report r = detail::make_report("theorem:sl-orderfree", m.descriptor(), "exhaustive");
  for (auto& loc : locals) {
    r.checked_count += loc.checked;
    r.gated_count += loc.gated;
    r.violations.insert(r.violations.end(), loc.violations.begin(), loc.violations.end());
  }
  return r;
}

/// bisector structure facts: (a) exactly two perpendicular bisectors at a
/// bisectable vertex, (b) the count distribution with "exactly six" on the
/// fully bisectable subclass, (c) joining line of a bisector intersection
/// with the third vertex is a bisector, (d) one of each complementary
/// bisector triple is concurrent
inline Report check_bisector_facts(const MetricModel<Fp>& m) {
  Report r = detail::make_report("theorem:bisector-facts", m.descriptor(), "exhaustive");
  const auto pts = all_points(m);
  const auto lines = all_lines(m);
  std::map<int, long> distribution;  // triangle bisector count -> triangles
  for (int ia = 0; ia < static_cast<int>(pts.size()); ++ia)
    for (int ib = 0; ib < static_cast<int>(pts.size()); ++ib)
      for (int ic = 0; ic < static_cast<int>(pts.size()); ++ic) {
        const Point<Fp>&a = pts[ia], &b = pts[ib], &c = pts[ic];
        if (ia == ib || ib == ic || ia == ic || collinear(a, b, c)) continue;
        const auto bis_a = bisector_lines_at(m, a, b, c, lines);
        // (a) count is 0 or 2; a pair is mutually perpendicular and matches
        // the constructive pair
        ++r.checked_count;
        if (!(bis_a.empty() || bis_a.size() == 2)) {
          r.violations.push_back({"(a) bisector count at A not 0 or 2",
                                  {wvar("A", a), wvar("B", b), wvar("C", c)}});
          continue;
        }
        if (bis_a.size() == 2) {
          const auto pair = bisectors(m, a, b, c);
          const bool match = pair && ((pair->first == bis_a[0] && pair->second == bis_a[1]) ||
                                      (pair->first == bis_a[1] && pair->second == bis_a[0]));
          if (!perpendicular(m, bis_a[0], bis_a[1]) || !match)
            r.violations.push_back({"(a) bisector pair not perpendicular or not the constructed pair",
                                    {wvar("A", a), wvar("B", b), wvar("C", c)}});
        } else if (bisectors(m, a, b, c).has_value()) {
          r.violations.push_back({"(a) constructive pair exists but exhaustive count is 0",
                                  {wvar("A", a), wvar("B", b), wvar("C", c)}});
        }
        if (ia < ib && ib < ic) {  // unordered triangles once
          const auto bis_b = bisector_lines_at(m, b, c, a, lines);
          const auto bis_c = bisector_lines_at(m, c, a, b, lines);
          const int total = static_cast<int>(bis_a.size() + bis_b.size() + bis_c.size());
          ++distribution[total];
          if (!bis_a.empty() && !bis_b.empty() && !bis_c.empty()) {
            if (total != 6)
              r.violations.push_back({"(b) fully bisectable triangle without exactly six bisectors",
                                      {wvar("A", a), wvar("B", b), wvar("C", c)}});
            // (d): each complementary choice pair has a concurrent side
            for (int mask = 0; mask < 8; ++mask) {
              const Line<Fp>&f = bis_a[mask & 1 ? 1 : 0], &g = bis_b[mask & 2 ? 1 : 0],
                            &h = bis_c[mask & 4 ? 1 : 0];
              const Line<Fp>&fu = bis_a[mask & 1 ? 0 : 1], &gv = bis_b[mask & 2 ? 0 : 1],
                            &hw = bis_c[mask & 4 ? 0 : 1];
              if (!concurrent(f, g, h) && !concurrent(fu, gv, hw))
                r.violations.push_back({"(d) neither complementary bisector triple concurrent",
                                        {wvar("A", a), wvar("B", b), wvar("C", c), wvar("f", f),
                                         wvar("g", g), wvar("h", h)}});
            }
          }
          // (c): intersections of bisectors at A and B join to bisectors at C
          for (const auto& f : bis_a)
            for (const auto& g : bis_b) {
              const auto mm = intersect(f, g);
              if (!mm || *mm == c) continue;
              const Line<Fp> join = line_through(*mm, c);
              const auto bc = bisector_lines_at(m, c, a, b, lines);
              bool is_bis = false;
              for (const auto& hb : bc) is_bis = is_bis || hb == join;
              if (!is_bis)
                r.violations.push_back({"(c) joining line <M,C> is not a bisector at C",
                                        {wvar("A", a), wvar("B", b), wvar("C", c), wvar("M", *mm),
                                         wvar("f", f), wvar("g", g)}});
            }
        }
      }
  for (const auto& [total, count] : distribution) {
    r.witnesses.push_back({"(b) distribution: triangles with " + std::to_string(total) + " bisectors",
                           {{"count", {std::to_string(count)}}}});
  }
  return r;
}

}  // namespace weakgeo
