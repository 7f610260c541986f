#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "weakgeo/geometry.hpp"

namespace weakgeo {

inline constexpr const char* kVersion = "0.1.0";

/// One named variable assignment; 1 component for a scalar, 2 for a point,
/// 3 for a line, every value an exact "p/q" string.
struct WitnessVar {
  std::string name;
  std::vector<std::string> comps;
};

struct Witness {
  std::string note;  // violated clause, axiom id, or similar
  std::vector<WitnessVar> vars;
};

template <Scalar F>
WitnessVar wvar(std::string name, const Point<F>& p) {
  return {std::move(name), {to_string(p.x), to_string(p.y)}};
}

template <Scalar F>
WitnessVar wvar(std::string name, const Line<F>& l) {
  return {std::move(name), {to_string(l.u), to_string(l.v), to_string(l.w)}};
}

inline WitnessVar wvar(std::string name, const Rat& x) { return {std::move(name), {to_string(x)}}; }
inline WitnessVar wvar(std::string name, const Fp& x) { return {std::move(name), {to_string(x)}}; }

struct Report {
  std::string command;
  std::string model;
  std::string mode;  // "exhaustive" or "sampled(n=...,seed=...)"
  std::uint64_t seed = 0;
  long checked_count = 0;
  long gated_count = 0;
  std::vector<Witness> violations;
  std::vector<Witness> witnesses;
  long elapsed_ms = 0;  // measured; pinned to 0 in JSON so reports are byte-reproducible
  std::string version = kVersion;

  bool ok() const { return violations.empty(); }
};

inline std::string sampled_mode(long n, std::uint64_t seed) {
  return "sampled(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")";
}

inline void merge_into(Report& dst, const Report& src) {
  dst.checked_count += src.checked_count;
  dst.gated_count += src.gated_count;
  dst.violations.insert(dst.violations.end(), src.violations.begin(), src.violations.end());
  dst.witnesses.insert(dst.witnesses.end(), src.witnesses.begin(), src.witnesses.end());
  dst.elapsed_ms += src.elapsed_ms;
}

inline nlohmann::ordered_json witness_to_json(const Witness& w) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (!w.note.empty()) j["note"] = w.note;
  for (const auto& v : w.vars) j[v.name] = v.comps;
  return j;
}

inline Witness witness_from_json(const nlohmann::ordered_json& j) {
  Witness w;
  for (const auto& [key, value] : j.items()) {
    if (key == "note") {
      w.note = value.get<std::string>();
      continue;
    }
    WitnessVar var;
    var.name = key;
    for (const auto& comp : value) var.comps.push_back(comp.get<std::string>());
    w.vars.push_back(std::move(var));
  }
  return w;
}

inline nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["command"] = r.command;
  j["model"] = r.model;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["checked_count"] = r.checked_count;
  j["gated_count"] = r.gated_count;
  auto viol = nlohmann::ordered_json::array();
  for (const auto& w : r.violations) viol.push_back(witness_to_json(w));
  j["violations"] = viol;
  auto wit = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) wit.push_back(witness_to_json(w));
  j["witnesses"] = wit;
  j["elapsed_ms"] = 0;
  j["version"] = r.version;
  return j;
}

inline Report report_from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.model = j.at("model").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.checked_count = j.at("checked_count").get<long>();
  r.gated_count = j.at("gated_count").get<long>();
  for (const auto& w : j.at("violations")) r.violations.push_back(witness_from_json(w));
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from_json(w));
  r.elapsed_ms = j.at("elapsed_ms").get<long>();
  r.version = j.at("version").get<std::string>();
  return r;
}

}  // namespace weakgeo
