#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weakgeo/field.hpp"

namespace weakgeo {

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first, trailing zeros always trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rat(1)); }
  /// the monomial t
  static Poly t() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const { return c_.back(); }
  Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator-(const Poly& a) {
    std::vector<Rat> r(a.c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Rat& s) {
    if (s.is_zero()) return Poly();
    std::vector<Rat> r(a.c_);
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// quotient and remainder, deg(rem) < deg(divisor)
  friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly rem = a;
    std::vector<Rat> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const int shift = rem.degree() - b.degree();
      const Rat factor = rem.leading() / b.leading();
      q[static_cast<std::size_t>(shift)] += factor;
      std::vector<Rat> sub(static_cast<std::size_t>(shift), Rat(0));
      sub.insert(sub.end(), b.c_.begin(), b.c_.end());
      for (auto& x : sub) x *= factor;
      rem = rem - Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
  }

  /// divide largest absolute coefficient out; positive scaling keeps signs
  Poly normalized() const {
    if (is_zero()) return *this;
    Rat m(0);
    for (const auto& x : c_)
      if (abs(x) > m) m = abs(x);
    std::vector<Rat> r(c_);
    for (auto& x : r) x /= m;
    return Poly(std::move(r));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> r(c_);
    const Rat lead = c_.back();
    for (auto& x : r) x /= lead;
    return Poly(std::move(r));
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rat& a = c_[static_cast<std::size_t>(k)];
      if (a.is_zero()) continue;
      if (!out.empty()) out += a.sign() > 0 ? " + " : " - ";
      else if (a.sign() < 0) out += "-";
      const Rat mag = abs(a);
      if (k == 0 || mag != 1) out += mag.str();
      if (k > 0) out += (mag != 1 ? "*" : "") + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto [q, r] = divrem(a, b);
    a = std::move(b);
    b = std::move(r).normalized();
  }
  return a.is_zero() ? a : a.monic();
}

/// p with repeated factors collapsed: p / gcd(p, p')
inline Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) return p;
  const Poly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divrem(p, g).first;
}

/// Integer-scaled primitive form: multiply away denominators, divide by
/// content. Signs of values are preserved up to a positive factor.
inline std::vector<BigInt> primitive_integer_coeffs(const Poly& p) {
  BigInt lcm_den = 1;
  for (const auto& a : p.coeffs()) lcm_den = lcm(lcm_den, denominator(a));
  std::vector<BigInt> ints;
  ints.reserve(p.coeffs().size());
  BigInt content = 0;
  for (const auto& a : p.coeffs()) {
    BigInt v = numerator(a) * (lcm_den / denominator(a));
    ints.push_back(v);
    content = gcd(content, v);
  }
  if (content != 0)
    for (auto& v : ints) v /= content;
  return ints;
}

}  // namespace weakgeo
