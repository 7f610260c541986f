#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weakgeo/polynomial.hpp"

namespace weakgeo {

/// Isolating interval for one real root. lo == hi marks an exactly-known
/// rational root; otherwise the unique root lies strictly inside and the
/// endpoints are not roots.
struct RootInterval {
  Rat lo, hi;
  bool is_point() const { return lo == hi; }
};

namespace detail {

/// Sturm chain of a square-free polynomial.
struct SturmChain {
  std::vector<Poly> seq;

  explicit SturmChain(const Poly& f) {
    seq.push_back(f);
    Poly d = f.derivative();
    if (!d.is_zero()) seq.push_back(d.normalized());
    while (seq.size() >= 2 && !seq.back().is_zero()) {
      Poly r = divrem(seq[seq.size() - 2], seq.back()).second;
      if (r.is_zero()) break;
      seq.push_back((-r).normalized());
    }
  }

  int variations(const Rat& x) const {
    int count = 0, prev = 0;
    for (const auto& s : seq) {
      const int sg = s.eval(x).sign();
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  }

  /// number of distinct roots in (a, b]; requires f(a) != 0
  int count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }
};

inline Rat cauchy_bound(const Poly& p) {
  Rat m(0);
  const Rat lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    Rat q = abs(p.coeff(k)) / lead;
    if (q > m) m = q;
  }
  return m + 1;
}

struct Factorization {
  std::vector<std::pair<BigInt, int>> primes;
  bool complete = true;
};

inline Factorization factor_by_trial(BigInt n) {
  Factorization f;
  if (n < 0) n = -n;
  for (BigInt d = 2; d <= 65536 && d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      f.primes.emplace_back(d, e);
    }
  }
  if (n > 1) {
    // cofactor below 65536^2 has no factor <= 65536, hence is prime
    if (n < BigInt(65536) * 65536) f.primes.emplace_back(n, 1);
    else {
      f.primes.emplace_back(n, 1);
      f.complete = false;
    }
  }
  return f;
}

inline std::vector<BigInt> divisors_capped(const Factorization& f, std::size_t cap) {
  std::vector<BigInt> divs{1};
  for (const auto& [prime, exp] : f.primes) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (int e = 1; e <= exp; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > cap) return {};
      }
    }
  }
  return divs;
}

/// Best-effort rational roots of a square-free polynomial (rational root
/// theorem). Missed roots are still isolated as ordinary intervals by the
/// Sturm bisection, so incompleteness here costs precision of labeling
/// only, never correctness.
inline std::vector<Rat> rational_roots(Poly& sf) {
  std::vector<Rat> roots;
  if (sf.degree() < 1) return roots;
  if (sf.coeff(0).is_zero()) {
    roots.emplace_back(0);
    sf = divrem(sf, Poly::t()).first;
  }
  if (sf.degree() == 1) {
    roots.push_back(-sf.coeff(0) / sf.coeff(1));
    sf = Poly(sf.leading());
    return roots;
  }
  if (sf.degree() < 1) return roots;
  const auto ints = primitive_integer_coeffs(sf);
  const auto nums = divisors_capped(factor_by_trial(ints.front()), 2048);
  const auto dens = divisors_capped(factor_by_trial(ints.back()), 2048);
  if (nums.empty() || dens.empty()) return roots;
  for (const auto& n : nums) {
    for (const auto& d : dens) {
      for (int s : {1, -1}) {
        const Rat cand(s > 0 ? n : -n, d);
        if (sf.degree() >= 1 && sf.eval(cand).is_zero()) {
          roots.push_back(cand);
          std::vector<Rat> lin{-cand, Rat(1)};
          sf = divrem(sf, Poly(std::move(lin))).first;
        }
      }
    }
  }
  return roots;
}

}  // namespace detail

/// number of distinct real roots of square-free f in (a, b]; f(a) must be nonzero
inline int count_roots_in(const Poly& f, const Rat& a, const Rat& b) {
  return detail::SturmChain(f).count(a, b);
}

/// Isolate all real roots of p in `range` (all of R when omitted) into
/// disjoint rational intervals, one root each. Rational roots come back as
/// point intervals when recognized.
inline std::vector<RootInterval> sturm_isolate(const Poly& p,
                                               std::optional<std::pair<Rat, Rat>> range = std::nullopt) {
  if (p.is_zero()) throw std::invalid_argument("sturm_isolate: indeterminate root set");
  Poly core = squarefree_part(p).monic();
  std::vector<RootInterval> out;
  if (core.degree() < 1) return out;

  Rat lo, hi;
  if (range) {
    lo = range->first;
    hi = range->second;
    if (lo > hi) std::swap(lo, hi);
  } else {
    hi = detail::cauchy_bound(core);
    lo = -hi;
  }

  std::vector<Rat> points;
  for (const Rat& r : detail::rational_roots(core))
    if (lo <= r && r <= hi) points.push_back(r);

  // rational-root extraction may be partial on huge coefficients; keep
  // endpoints off the remaining root set
  for (const Rat* e : {&lo, &hi}) {
    while (core.degree() >= 1 && core.eval(*e).is_zero()) {
      points.push_back(*e);
      std::vector<Rat> lin{-*e, Rat(1)};
      core = divrem(core, Poly(std::move(lin))).first;
    }
  }

  std::vector<RootInterval> intervals;
  if (core.degree() >= 1 && lo < hi) {
    bool restart = true;
    while (restart) {
      restart = false;
      intervals.clear();
      detail::SturmChain chain(core);
      std::vector<std::pair<Rat, Rat>> stack{{lo, hi}};
      while (!stack.empty() && !restart) {
        auto [a, b] = stack.back();
        stack.pop_back();
        const int n = chain.count(a, b);
        if (n == 0) continue;
        const bool point_inside = std::any_of(points.begin(), points.end(),
                                              [&](const Rat& r) { return a <= r && r <= b; });
        if (n == 1 && !point_inside) {
          intervals.push_back({a, b});
          continue;
        }
        const Rat mid = (a + b) / 2;
        if (core.eval(mid).is_zero()) {
          points.push_back(mid);
          std::vector<Rat> lin{-mid, Rat(1)};
          core = divrem(core, Poly(std::move(lin))).first;
          restart = core.degree() >= 1;
          if (!restart) intervals.clear();
          continue;
        }
        stack.push_back({a, mid});
        stack.push_back({mid, b});
      }
    }
  }

  std::sort(intervals.begin(), intervals.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

  // shared endpoints of adjacent boxes are refined away so the returned
  // intervals are disjoint as sets
  detail::SturmChain chain(core);
  auto shrink_away_from = [&](RootInterval& iv, const Rat edge, bool edge_is_hi) {
    while ((edge_is_hi ? iv.hi == edge : iv.lo == edge)) {
      const Rat mid = (iv.lo + iv.hi) / 2;
      if (core.eval(mid).is_zero()) {  // hit the root exactly
        iv.lo = iv.hi = mid;
        return;
      }
      if (chain.count(iv.lo, mid) == 1) iv.hi = mid;
      else iv.lo = mid;
    }
  };
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
    if (intervals[i].hi == intervals[i + 1].lo) {
      shrink_away_from(intervals[i], intervals[i].hi, true);
      if (intervals[i].is_point()) continue;
      if (intervals[i].hi == intervals[i + 1].lo) shrink_away_from(intervals[i + 1], intervals[i + 1].lo, false);
    }
  }

  for (auto& iv : intervals) {
    while (!iv.is_point() && iv.hi - iv.lo > 1) {
      const Rat mid = (iv.lo + iv.hi) / 2;
      if (core.eval(mid).is_zero()) {
        iv.lo = iv.hi = mid;
        break;
      }
      if (chain.count(iv.lo, mid) == 1) iv.hi = mid;
      else iv.lo = mid;
    }
  }

  for (const Rat& r : points) out.push_back({r, r});
  out.insert(out.end(), intervals.begin(), intervals.end());
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const RootInterval& a, const RootInterval& b) {
                          return a.is_point() && b.is_point() && a.lo == b.lo;
                        }),
            out.end());
  return out;
}

/// Sign of q at the root r of p isolated by iso: -1, 0, +1. Exact: the
/// q(r) == 0 case is decided through gcd(p, q), never by shrinking alone.
inline int refine_to_sign(const Poly& p, const Poly& q, const RootInterval& iso) {
  if (q.is_zero()) return 0;
  if (iso.is_point()) return q.eval(iso.lo).sign();

  const Poly sf = squarefree_part(p).monic();
  const Poly g = gcd(sf, q);
  if (g.degree() >= 1 && count_roots_in(g, iso.lo, iso.hi) > 0) return 0;

  const Poly qsf = squarefree_part(q).monic();
  Rat a = iso.lo, b = iso.hi;
  if (sf.eval(a).sign() * sf.eval(b).sign() >= 0)
    throw std::invalid_argument("refine_to_sign: interval does not isolate a simple root");
  for (;;) {
    if (count_roots_in(qsf, a, b) == 0) return q.eval(b).sign();
    const Rat mid = (a + b) / 2;
    const int sm = sf.eval(mid).sign();
    if (sm == 0) return q.eval(mid).sign();
    if (sf.eval(a).sign() * sm < 0) b = mid;
    else a = mid;
  }
}

}  // namespace weakgeo
