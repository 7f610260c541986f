#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace weakgeo {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational, always stored reduced with a
/// positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Rat& x) { return x.sign(); }

inline std::string to_string(const Rat& x) { return x.str(); }

inline Rat rat_from_string(const std::string& s) { return Rat(s); }

/// Element of the prime field GF(p), p an odd prime. The modulus travels
/// with the value; mixing moduli is a programming error.
struct Fp {
  std::int64_t v = 0;
  std::int64_t p = 0;

  Fp() = default;
  Fp(std::int64_t value, std::int64_t modulus) : v(((value % modulus) + modulus) % modulus), p(modulus) {}

  Fp of(std::int64_t k) const { return Fp(k, p); }

  friend Fp operator+(const Fp& a, const Fp& b) {
    assert(a.p == b.p);
    return Fp(a.v + b.v, a.p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    assert(a.p == b.p);
    return Fp(a.v - b.v, a.p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    assert(a.p == b.p);
    return Fp(a.v * b.v, a.p);
  }
  friend Fp operator-(const Fp& a) { return Fp(-a.v, a.p); }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  friend bool operator==(const Fp& a, const Fp& b) {
    assert(a.p == b.p);
    return a.v == b.v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const {
    if (v == 0) throw std::domain_error("Fp: division by zero");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1, r = p, new_r = v;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    assert(r == 1);
    return Fp(t, p);
  }

  bool is_zero() const { return v == 0; }
};

inline std::string to_string(const Fp& x) { return std::to_string(x.v); }

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

/// Same-field constant: builds k in the field that `like` lives in.
inline Rat scalar_of(const Rat&, std::int64_t k) { return Rat(k); }
inline Fp scalar_of(const Fp& like, std::int64_t k) { return like.of(k); }

template <class F>
inline constexpr bool is_ordered_field_v = std::is_same_v<F, Rat>;

template <class F>
concept Scalar = std::is_same_v<F, Rat> || std::is_same_v<F, Fp>;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Exact square root witness: a value r with r*r == x, if one exists in
/// the field. Total; empty means "no square root in this field".
inline std::optional<Rat> is_square(const Rat& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return Rat(0);
  const BigInt num = numerator(x), den = denominator(x);
  const BigInt rn = sqrt(num), rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rat(rn, rd);
}

inline std::optional<Fp> is_square(const Fp& x) {
  // exhaustive residue scan; all moduli in use are small
  for (std::int64_t r = 0; r <= x.p / 2; ++r)
    if ((r * r) % x.p == x.v) return Fp(r, x.p);
  return std::nullopt;
}

}  // namespace weakgeo
