#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "weakgeo/geometry.hpp"

namespace weakgeo {

/// Parsed model descriptor: `q:c=<int or ratio>` or `gf:<p>:c=<int>`.
struct ModelDescriptor {
  bool finite = false;
  Rat c_rational;
  std::int64_t p = 0;
  std::int64_t c_residue = 0;

  static ModelDescriptor parse(const std::string& text) {
    ModelDescriptor d;
    try {
      if (text.rfind("q:c=", 0) == 0) {
        const auto payload = text.substr(4);
        if (payload.empty()) throw std::invalid_argument(text);
        d.finite = false;
        d.c_rational = rat_from_string(payload);
        return d;
      }
      if (text.rfind("gf:", 0) == 0) {
        const auto rest = text.substr(3);
        const auto colon = rest.find(":c=");
        if (colon == std::string::npos) throw std::invalid_argument(text);
        d.finite = true;
        d.p = std::stoll(rest.substr(0, colon));
        d.c_residue = std::stoll(rest.substr(colon + 3));
        if (d.p < 3 || !is_prime(d.p)) {
          throw std::invalid_argument("model descriptor: modulus must be an odd prime >= 3: " + text);
        }
        return d;
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      // fall through to the generic diagnostic
    }
    throw std::invalid_argument("model descriptor: expected q:c=<ratio> or gf:<p>:c=<int>, got '" + text +
                                "'");
  }

  std::string canonical() const {
    if (finite) return "gf:" + std::to_string(p) + ":c=" + std::to_string(c_residue);
    return "q:c=" + c_rational.str();
  }

  QModel q_model() const {
    if (finite) throw std::invalid_argument("descriptor names a finite model");
    return QModel(c_rational, canonical());
  }

  MetricModel<Fp> fp_model() const {
    if (!finite) throw std::invalid_argument("descriptor names an ordered model");
    return MetricModel<Fp>(Fp(c_residue, p), canonical(), p);
  }
};

inline QModel make_q_model(const Rat& c) {
  return QModel(c, "q:c=" + c.str());
}

inline MetricModel<Fp> make_fp_model(std::int64_t p, std::int64_t c) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("prime field modulus must be an odd prime >= 3");
  return MetricModel<Fp>(Fp(c, p), "gf:" + std::to_string(p) + ":c=" + std::to_string(c), p);
}

}  // namespace weakgeo
