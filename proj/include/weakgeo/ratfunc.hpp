#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "weakgeo/polynomial.hpp"

namespace weakgeo {

/// Rational function num/den over Q[t], kept reduced with monic
/// denominator. Carrier for the one-parameter point coordinates of the
/// falsification families.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::one()) {}
  explicit RatFunc(Rat constant) : num_(Poly(std::move(constant))), den_(Poly::one()) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
  }

  static RatFunc var() { return RatFunc(Poly::t(), Poly::one()); }
  static RatFunc from(const Poly& p) { return RatFunc(p, Poly::one()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  std::optional<Rat> eval(const Rat& t) const {
    const Rat d = den_.eval(t);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(t) / d;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce() {
    const Poly g = gcd(num_, den_);
    if (g.degree() >= 1) {
      num_ = divrem(num_, g).first;
      den_ = divrem(den_, g).first;
    }
    if (!den_.is_zero() && den_.leading() != 1) {
      const Rat lead = den_.leading();
      num_ = num_ * (Rat(1) / lead);
      den_ = den_.monic();
    }
  }

  Poly num_, den_;
};

struct RFPoint {
  RatFunc x, y;
  friend RFPoint operator+(const RFPoint& a, const RFPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend RFPoint operator-(const RFPoint& a, const RFPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend RFPoint operator*(const RatFunc& s, const RFPoint& a) { return {s * a.x, s * a.y}; }
};

struct RFLine {
  RatFunc u, v, w;
};

inline RFLine rf_line_through(const RFPoint& a, const RFPoint& b) {
  return {a.y - b.y, b.x - a.x, a.x * b.y - b.x * a.y};
}

/// intersection point plus the determinant whose vanishing marks the
/// degenerate parameters
inline std::pair<RFPoint, RatFunc> rf_intersect(const RFLine& l1, const RFLine& l2) {
  const RatFunc det = l1.u * l2.v - l2.u * l1.v;
  if (det.is_zero()) throw std::domain_error("rf_intersect: identically parallel lines");
  return {{(l1.v * l2.w - l2.v * l1.w) / det, (l2.u * l1.w - l1.u * l2.w) / det}, det};
}

inline RatFunc rf_cross(const RFPoint& a, const RFPoint& b) { return a.x * b.y - a.y * b.x; }

/// Euclidean coordinate dot product; for parallel vectors over an ordered
/// field its sign decides whether they point the same way
inline RatFunc rf_dot(const RFPoint& a, const RFPoint& b) { return a.x * b.x + a.y * b.y; }

inline RatFunc rf_norm(const Rat& c, const RFPoint& d) { return d.x * d.x + RatFunc(c) * (d.y * d.y); }

}  // namespace weakgeo
