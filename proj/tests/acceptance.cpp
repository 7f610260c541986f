// Acceptance suite: run every contract criterion at its stated budget and
// tolerance, one PASS/FAIL line each. Everything is exact arithmetic; the
// only tolerances are wall-clock budgets.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "weakgeo/axioms.hpp"
#include "weakgeo/facts.hpp"
#include "weakgeo/theorems.hpp"

using namespace weakgeo;

namespace {

struct Collected {
  std::string kind;  // selects the independent re-checker
  Report report;
};

std::vector<Collected> g_reports;

int g_failures = 0;

long ms_since(const std::chrono::steady_clock::time_point& t0) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count());
}

void verdict(int criterion, bool pass, const std::string& detail, long elapsed_ms, long budget_ms) {
  const bool in_time = elapsed_ms <= budget_ms;
  const bool ok = pass && in_time;
  if (!ok) ++g_failures;
  std::cout << "CRITERION " << criterion << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << "  ["
            << elapsed_ms << " ms, budget " << budget_ms << " ms]" << std::endl;
}

QPoint wq(const Witness& w, const std::string& name) {
  for (const auto& v : w.vars)
    if (v.name == name) return {rat_from_string(v.comps.at(0)), rat_from_string(v.comps.at(1))};
  throw std::runtime_error("witness variable " + name + " missing");
}

Point<Fp> wfp(const Witness& w, const std::string& name, std::int64_t p) {
  for (const auto& v : w.vars)
    if (v.name == name) return {Fp(std::stoll(v.comps.at(0)), p), Fp(std::stoll(v.comps.at(1)), p)};
  throw std::runtime_error("witness variable " + name + " missing");
}

Line<Fp> wfpline(const Witness& w, const std::string& name, std::int64_t p) {
  for (const auto& v : w.vars)
    if (v.name == name)
      return Line<Fp>(Fp(std::stoll(v.comps.at(0)), p), Fp(std::stoll(v.comps.at(1)), p),
                      Fp(std::stoll(v.comps.at(2)), p));
  throw std::runtime_error("witness variable " + name + " missing");
}

// --- criterion 1 ---------------------------------------------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto m = make_q_model(Rat(-2));
  const Report r = repro_a12(m);
  g_reports.push_back({"a12", r});
  bool pass = r.violations.size() == 1 && r.checked_count == 1 && r.gated_count == 0;
  std::string detail = "repro a12";
  if (pass) {
    const Witness& w = r.violations.front();
    const QPoint o = wq(w, "o"), a = wq(w, "a"), b = wq(w, "b"), c = wq(w, "c");
    const QLine loa(Rat(1), Rat(1), Rat(-1)), lob(Rat(1), Rat(2), Rat(-2));
    pass = pass && line_through(o, a) == loa && line_through(o, b) == lob &&
           perpendicular(m, loa, lob);
    pass = pass && foot(m, o, line_through(a, b)) == (QPoint{Rat(0), Rat(0)}) &&
           c == (QPoint{Rat(0), Rat(0)});
    pass = pass && !between(a, c, b);
    detail += pass ? ": exact witness o=(0,1) a=(1,0) b=(2,0) foot=(0,0), lines orthogonal, Z(acb) false"
                   : ": witness mismatch";
  } else {
    detail += ": counterexample not reproduced";
  }
  verdict(1, pass, detail, ms_since(t0), 1000);
}

// --- criterion 2 ---------------------------------------------------------

void criterion_2() {
  {
    const auto t0 = std::chrono::steady_clock::now();
    const Report r = check_axiom(make_q_model(Rat(1)), AxiomId::A12, Budget{false, 10000, 0});
    g_reports.push_back({"a12", r});
    verdict(2, r.violations.empty(),
            "A12 sampled 10^4 on q:c=1: violations=" + std::to_string(r.violations.size()),
            ms_since(t0), 30000);
  }
  {
    const auto t0 = std::chrono::steady_clock::now();
    const Report r = check_axiom(make_q_model(Rat(-2)), AxiomId::A12, Budget{false, 10000, 0});
    g_reports.push_back({"a12", r});
    verdict(2, !r.violations.empty(),
            "A12 sampled 10^4 on q:c=-2: violations=" + std::to_string(r.violations.size()),
            ms_since(t0), 30000);
  }
}

// --- criterion 3 ---------------------------------------------------------

void criterion_3() {
  for (const auto& [p, c] : {std::pair<std::int64_t, std::int64_t>{5, 2}, {7, 1}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto m = make_fp_model(p, c);
    const Report r = check_medians(m);
    g_reports.push_back({"medians", r});
    const bool char_ok = model_characteristic_ne3(m).ne3;
    verdict(3, r.violations.empty() && char_ok,
            "medians exhaustive on " + m.descriptor() + ": violations=" +
                std::to_string(r.violations.size()) + ", char!=3 " + (char_ok ? "true" : "false"),
            ms_since(t0), 60000);
  }
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto m = make_fp_model(3, 1);
    const Report r = check_medians(m, false);
    g_reports.push_back({"medians", r});
    const auto ch = model_characteristic_ne3(m);
    bool pass = !r.violations.empty() && !ch.ne3 && ch.witness.has_value();
    if (pass) {
      const auto [wa, wb] = *ch.witness;
      const auto ab = compose(point_reflection(m, wa), point_reflection(m, wb));
      pass = wa != wb && is_identity(m, compose(ab, compose(ab, ab)));
    }
    verdict(3, pass,
            "medians exhaustive on gf:3:c=1: violations=" + std::to_string(r.violations.size()) +
                ", characteristic witness pair with (AB)^3 = 1 re-verified",
            ms_since(t0), 60000);
  }
}

// --- criterion 4 ---------------------------------------------------------

void criterion_4() {
  const auto t0 = std::chrono::steady_clock::now();
  const Report r = check_median_uniqueness_lemma(make_fp_model(5, 2));
  g_reports.push_back({"none", r});
  verdict(4, r.violations.empty(),
          "median uniqueness lemma on gf:5:c=2: configs=" + std::to_string(r.checked_count) +
              ", violations=" + std::to_string(r.violations.size()),
          ms_since(t0), 60000);
}

// --- criterion 5 ---------------------------------------------------------

bool def1_congruence_oracle(const MetricModel<Fp>& m) {
  const auto motions = enumerate_motions(m);
  const auto pts = all_points(m);
  const std::size_t n = pts.size();
  auto index = [&](const Point<Fp>& p) {
    return static_cast<std::size_t>(p.x.v) * static_cast<std::size_t>(m.prime()) +
           static_cast<std::size_t>(p.y.v);
  };
  std::vector<bool> reach(n * n * n * n, false);
  for (const auto& a : pts)
    for (const auto& b : pts) {
      const std::size_t from = index(a) * n + index(b);
      for (const auto& mo : motions)
        reach[from * n * n + index(mo.apply(a)) * n + index(mo.apply(b))] = true;
    }
  for (const auto& a : pts)
    for (const auto& b : pts)
      for (const auto& c : pts)
        for (const auto& d : pts) {
          const std::size_t ab = index(a) * n + index(b);
          const bool def1 = reach[ab * n * n + index(c) * n + index(d)] ||
                            reach[ab * n * n + index(d) * n + index(c)];
          if (def1 != segment_congruent_group(m, a, b, c, d)) return false;
        }
  return true;
}

void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  bool all_hold = true;
  std::ostringstream detail;
  for (const auto& [p, c] : {std::pair<std::int64_t, std::int64_t>{5, 2}, {7, 1}}) {
    const auto m = make_fp_model(p, c);
    for (auto id : {AxiomId::H1, AxiomId::H2, AxiomId::H3, AxiomId::H4, AxiomId::H5}) {
      const Report r = check_hjelmslev(m, id);
      g_reports.push_back({"hjelmslev", r});
      if (!r.violations.empty()) {
        all_hold = false;
        detail << " " << axiom_name(id) << "@" << m.descriptor() << " violated;";
      }
    }
  }
  const bool oracle_ok = def1_congruence_oracle(make_fp_model(5, 2));
  verdict(5, all_hold && oracle_ok,
          std::string("H1..H5 exhaustive on gf:5:c=2 and gf:7:c=1") +
              (all_hold ? " all hold" : detail.str()) + "; Definition-1 congruence oracle " +
              (oracle_ok ? "agrees" : "disagrees"),
          ms_since(t0), 120000);
}

// --- criterion 6 ---------------------------------------------------------

void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto m = make_fp_model(5, 2);
  const Report sl = check_orderfree_sl(m);
  g_reports.push_back({"none", sl});
  const Report bf = check_bisector_facts(m);
  g_reports.push_back({"distribution", bf});
  bool six_reported = false;
  for (const auto& w : bf.witnesses)
    if (w.note.find("with 6 bisectors") != std::string::npos) six_reported = true;
  verdict(6, sl.violations.empty() && bf.violations.empty() && six_reported,
          "order-free SL + bisector facts on gf:5:c=2: violations=" +
              std::to_string(sl.violations.size() + bf.violations.size()) +
              ", six-bisector class reported " + (six_reported ? "yes" : "no"),
          ms_since(t0), 120000);
}

// --- criterion 7 ---------------------------------------------------------

void criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto m = make_q_model(Rat(1));
  const Report r1 = sl_falsification_search(m, 1000, 42);
  g_reports.push_back({"sl", r1});
  const std::string bytes1 = report_to_json(r1).dump(2);
  setenv("WEAKGEO_WORKERS", "3", 1);
  const Report r2 = sl_falsification_search(m, 1000, 42);
  unsetenv("WEAKGEO_WORKERS");
  const std::string bytes2 = report_to_json(r2).dump(2);
  const bool deterministic = bytes1 == bytes2;
  verdict(7, r1.violations.empty() && deterministic,
          "sl falsification, 10^3 seeded families on q:c=1: counterexamples=" +
              std::to_string(r1.violations.size()) + ", roots checked=" +
              std::to_string(r1.checked_count) + ", gated=" + std::to_string(r1.gated_count) +
              ", reports byte-identical across runs and worker counts " +
              (deterministic ? "yes" : "no"),
          ms_since(t0), 600000);
}

// --- criterion 8 ---------------------------------------------------------

void criterion_8() {
  const auto m = make_q_model(Rat(1));
  for (const auto& id : fact_ids()) {
    const auto t0 = std::chrono::steady_clock::now();
    const Report r = check_fact(m, id, 10000, 0);
    g_reports.push_back({"none", r});
    verdict(8, r.violations.empty() && r.checked_count == 10000,
            id + " on q:c=1: configurations=" + std::to_string(r.checked_count) +
                ", violations=" + std::to_string(r.violations.size()),
            ms_since(t0), 60000);
  }
}

// --- criterion 9: witness round-trip -------------------------------------

bool recheck_a12_violation(const QModel& m, const Witness& w) {
  const QPoint o = wq(w, "o"), a = wq(w, "a"), b = wq(w, "b"), c = wq(w, "c"), a1 = wq(w, "a'"),
               b1 = wq(w, "b'");
  return between(a, o, a1) && congruent(m, o, a, o, a1) && congruent(m, b, a, b, a1) && o != b &&
         strictly_collinear(a, b, c) && between(b, c, b1) && congruent(m, c, b, c, b1) &&
         congruent(m, o, b, o, b1) && !between(a, c, b);
}

bool recheck_medians_violation(const MetricModel<Fp>& m, const Witness& w) {
  const auto p = m.prime();
  const auto a = wfp(w, "A", p), b = wfp(w, "B", p), c = wfp(w, "C", p);
  if (collinear(a, b, c)) return false;
  const auto u = midpoint(b, c), wmid = midpoint(a, b);
  return norm(m, a, u) == norm(m, c, wmid) && norm(m, b, a) != norm(m, b, c);
}

bool recheck_report(const Collected& entry) {
  const Report& r = entry.report;
  const ModelDescriptor desc = ModelDescriptor::parse(r.model);
  if (entry.kind == "a12") {
    const auto m = desc.q_model();
    for (const auto& w : r.violations)
      if (!recheck_a12_violation(m, w)) return false;
    return true;
  }
  if (entry.kind == "medians") {
    const auto m = desc.fp_model();
    for (const auto& w : r.violations)
      if (!recheck_medians_violation(m, w)) return false;
    return true;
  }
  if (entry.kind == "hjelmslev") {
    if (!r.violations.empty()) return false;
    const auto m = desc.fp_model();
    for (const auto& w : r.witnesses) {
      if (w.note.find("H5") == std::string::npos) continue;
      if (!perpendicular(m, wfpline(w, "a", desc.p), wfpline(w, "b", desc.p))) return false;
    }
    return true;
  }
  // "sl", "none", "distribution": the criterion demanded zero violations,
  // so round-tripping means confirming there is nothing to re-check
  return r.violations.empty();
}

void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  long rechecked = 0;
  bool pass = true;
  for (const auto& entry : g_reports) {
    // serialize and parse back: the re-check consumes only the JSON form
    const auto j = report_to_json(entry.report);
    Collected round{entry.kind, report_from_json(nlohmann::ordered_json::parse(j.dump(2)))};
    if (!recheck_report(round)) {
      pass = false;
      std::cout << "  round-trip failure in " << entry.report.command << " on "
                << entry.report.model << "\n";
    }
    rechecked += static_cast<long>(round.report.violations.size() + round.report.witnesses.size());
  }
  verdict(9, pass,
          "witness round-trip over " + std::to_string(g_reports.size()) + " reports, " +
              std::to_string(rechecked) + " witnesses re-evaluated through the plane predicates",
          ms_since(t0), 60000);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures == 0) {
    std::cout << "ACCEPTANCE: all criteria passed" << std::endl;
    return 0;
  }
  std::cout << "ACCEPTANCE: " << g_failures << " criterion checks failed" << std::endl;
  return 1;
}
