#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weakgeo/axioms.hpp"
#include "weakgeo/facts.hpp"
#include "weakgeo/theorems.hpp"

namespace {

using namespace weakgeo;

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--output", out.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag_callback("--json", [&out] { out.format = "json"; }, "shorthand for --output json");
  cmd->add_option("--out", out.out_path, "write the report to this file instead of stdout");
}

void print_text(std::ostream& os, const Report& r) {
  os << r.command << "  model=" << r.model << "  mode=" << r.mode << "  seed=" << r.seed << "\n"
     << "  checked=" << r.checked_count << "  gated=" << r.gated_count
     << "  violations=" << r.violations.size() << "  elapsed_ms=" << r.elapsed_ms << "\n";
  auto print_witness = [&](const Witness& w, const char* label) {
    os << "  " << label;
    if (!w.note.empty()) os << " [" << w.note << "]";
    for (const auto& v : w.vars) {
      os << "  " << v.name << "=(";
      for (std::size_t i = 0; i < v.comps.size(); ++i) os << (i ? ", " : "") << v.comps[i];
      os << ")";
    }
    os << "\n";
  };
  std::size_t shown = 0;
  for (const auto& w : r.violations) {
    if (++shown > 10) {
      os << "  ... " << (r.violations.size() - 10) << " more violations\n";
      break;
    }
    print_witness(w, "violation");
  }
  for (const auto& w : r.witnesses) print_witness(w, "witness");
}

int emit(const Report& r, const OutputOptions& out, bool expect_counterexample) {
  std::string payload;
  if (out.format == "json") payload = report_to_json(r).dump(2) + "\n";
  else {
    std::ostringstream oss;
    print_text(oss, r);
    payload = oss.str();
  }
  if (!out.out_path.empty()) {
    std::ofstream ofs(out.out_path, std::ios::binary | std::ios::trunc);
    if (!ofs) {
      std::cerr << "cannot write " << out.out_path << "\n";
      return 64;
    }
    ofs << payload;
    std::cerr << r.command << ": report written to " << out.out_path << "\n";
  } else {
    std::cout << payload;
  }
  const bool found = !r.violations.empty();
  if (expect_counterexample) {
    if (!found) std::cerr << r.command << ": expected counterexample not found\n";
    return found ? 0 : 2;
  }
  return found ? 1 : 0;
}

template <class Fn>
Report timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Report r = fn();
  r.elapsed_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
          .count());
  return r;
}

std::vector<AxiomId> parse_axiom_list(const std::vector<std::string>& names) {
  std::vector<AxiomId> ids;
  for (const auto& n : names) {
    const auto id = parse_axiom(n);
    if (!id) throw std::invalid_argument("unknown axiom '" + n + "'");
    ids.push_back(*id);
  }
  return ids;
}

std::string join_names(const std::vector<AxiomId>& ids) {
  std::string s;
  for (const auto& id : ids) s += (s.empty() ? "" : ",") + axiom_name(id);
  return s;
}

Report run_axioms(const ModelDescriptor& desc, std::vector<AxiomId> ids, const Budget& budget) {
  if (ids.empty()) {
    if (desc.finite) ids = {AxiomId::A5,  AxiomId::A6, AxiomId::A7,
                            AxiomId::A8,  AxiomId::A9, AxiomId::A10, AxiomId::LOWDIM};
    else
      ids = {AxiomId::A1, AxiomId::A2,  AxiomId::A3,  AxiomId::A4,  AxiomId::A5,
             AxiomId::A6, AxiomId::A7,  AxiomId::A8,  AxiomId::A9,  AxiomId::A10,
             AxiomId::A11, AxiomId::A12, AxiomId::LOWDIM};
  }
  Report merged;
  bool first = true;
  for (const auto id : ids) {
    const Report r = desc.finite ? check_axiom(desc.fp_model(), id, budget)
                                 : check_axiom(desc.q_model(), id, budget);
    if (first) {
      merged = r;
      first = false;
    } else {
      // annotate provenance before merging so the axiom stays identifiable
      Report tagged = r;
      for (auto& w : tagged.violations) w.note = axiom_name(id) + ": " + w.note;
      for (auto& w : tagged.witnesses) w.note = axiom_name(id) + ": " + w.note;
      merge_into(merged, tagged);
    }
  }
  merged.command = "axioms:" + join_names(ids);
  return merged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weakgeo: exact-arithmetic checks of reflection-geometry axioms and theorems"};
  app.require_subcommand(1);

  // axioms
  auto* axioms_cmd = app.add_subcommand("axioms", "check axioms A1..A12 / LOWDIM against a model");
  std::string model_str;
  std::vector<std::string> axiom_names;
  long samples = 10000;
  std::uint64_t seed = 0;
  bool exhaustive = false, expect_cx = false;
  OutputOptions out;
  axioms_cmd->add_option("--model", model_str, "model descriptor, q:c=<ratio> or gf:<p>:c=<int>")
      ->required();
  axioms_cmd->add_option("--axiom", axiom_names, "axiom ids (repeatable); default: all applicable");
  axioms_cmd->add_option("--samples", samples, "sample budget for ordered models");
  axioms_cmd->add_option("--seed", seed, "sampling seed");
  axioms_cmd->add_flag("--exhaustive", exhaustive, "exhaustive sweep (finite models only)");
  axioms_cmd->add_flag("--expect-counterexample", expect_cx,
                       "exit 0 when violations are found, 2 otherwise");
  add_output_flags(axioms_cmd, out);

  // hjelmslev
  auto* hj_cmd = app.add_subcommand("hjelmslev", "check H1..H5 exhaustively on a finite model");
  std::string hj_model;
  std::vector<std::string> hj_axioms;
  OutputOptions hj_out;
  hj_cmd->add_option("--model", hj_model, "finite model descriptor gf:<p>:c=<int>")->required();
  hj_cmd->add_option("--axiom", hj_axioms, "axiom ids among H1..H5 (repeatable); default all");
  add_output_flags(hj_cmd, hj_out);

  // theorem
  auto* th_cmd = app.add_subcommand("theorem", "check one of the geometry theorems");
  std::string th_name, th_model;
  long families = 1000;
  std::uint64_t th_seed = 0;
  bool th_exhaustive = false, th_expect = false;
  OutputOptions th_out;
  th_cmd->add_option("name", th_name,
                     "medians | sl-general | sl-orderfree | median-uniqueness | bisector-facts")
      ->required();
  th_cmd->add_option("--model", th_model, "model descriptor")->required();
  th_cmd->add_option("--families", families, "family budget for sl-general");
  th_cmd->add_option("--seed", th_seed, "sampling seed for sl-general");
  th_cmd->add_flag("--exhaustive", th_exhaustive, "exhaustive sweep (finite models)");
  th_cmd->add_flag("--expect-counterexample", th_expect,
                   "exit 0 when violations are found, 2 otherwise");
  add_output_flags(th_cmd, th_out);

  // facts
  auto* facts_cmd = app.add_subcommand("facts", "check one of the facts F1..F13 / lemmas L1..L4");
  std::string fact_id, facts_model = "q:c=1";
  long facts_samples = 10000;
  std::uint64_t facts_seed = 0;
  OutputOptions facts_out;
  facts_cmd->add_option("--id", fact_id, "fact id, e.g. F5 or L2")->required();
  facts_cmd->add_option("--samples", facts_samples, "number of constructed configurations");
  facts_cmd->add_option("--seed", facts_seed, "sampling seed");
  facts_cmd->add_option("--model", facts_model, "ordered model descriptor (default q:c=1)");
  add_output_flags(facts_cmd, facts_out);

  // repro
  auto* repro_cmd = app.add_subcommand("repro", "reproduce a named reference configuration");
  std::string repro_what;
  OutputOptions repro_out;
  repro_cmd->add_option("what", repro_what, "only 'a12' is known")->required();
  add_output_flags(repro_cmd, repro_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 64;
  }

  try {
    if (*axioms_cmd) {
      const auto desc = ModelDescriptor::parse(model_str);
      Budget budget{exhaustive || desc.finite, samples, seed};
      const Report r = timed([&] { return run_axioms(desc, parse_axiom_list(axiom_names), budget); });
      std::cerr << r.command << ": " << r.elapsed_ms << " ms\n";
      return emit(r, out, expect_cx);
    }
    if (*hj_cmd) {
      const auto desc = ModelDescriptor::parse(hj_model);
      if (!desc.finite) throw std::invalid_argument("hjelmslev checks need a finite model");
      std::vector<AxiomId> ids = parse_axiom_list(hj_axioms);
      if (ids.empty()) ids = {AxiomId::H1, AxiomId::H2, AxiomId::H3, AxiomId::H4, AxiomId::H5};
      for (const auto id : ids)
        if (!axiom_is_hjelmslev(id))
          throw std::invalid_argument(axiom_name(id) + " is not one of H1..H5");
      const Report r = timed([&] {
        Report merged;
        bool first = true;
        const auto m = desc.fp_model();
        for (const auto id : ids) {
          const Report one = check_hjelmslev(m, id);
          if (first) {
            merged = one;
            first = false;
          } else {
            merge_into(merged, one);
          }
        }
        merged.command = "hjelmslev:" + join_names(ids);
        return merged;
      });
      std::cerr << r.command << ": " << r.elapsed_ms << " ms\n";
      return emit(r, hj_out, false);
    }
    if (*th_cmd) {
      const auto desc = ModelDescriptor::parse(th_model);
      Report r;
      if (th_name == "sl-general") {
        if (desc.finite) throw std::invalid_argument("sl-general needs an ordered model");
        r = timed([&] { return sl_falsification_search(desc.q_model(), families, th_seed); });
      } else if (th_name == "medians") {
        if (!desc.finite) throw std::invalid_argument("medians needs a finite model");
        r = timed([&] { return check_medians(desc.fp_model(), !th_expect); });
      } else if (th_name == "median-uniqueness") {
        if (!desc.finite) throw std::invalid_argument("median-uniqueness needs a finite model");
        r = timed([&] { return check_median_uniqueness_lemma(desc.fp_model()); });
      } else if (th_name == "sl-orderfree") {
        if (!desc.finite) throw std::invalid_argument("sl-orderfree needs a finite model");
        r = timed([&] { return check_orderfree_sl(desc.fp_model()); });
      } else if (th_name == "bisector-facts") {
        if (!desc.finite) throw std::invalid_argument("bisector-facts needs a finite model");
        r = timed([&] { return check_bisector_facts(desc.fp_model()); });
      } else {
        throw std::invalid_argument("unknown theorem '" + th_name + "'");
      }
      std::cerr << r.command << ": " << r.elapsed_ms << " ms\n";
      return emit(r, th_out, th_expect);
    }
    if (*facts_cmd) {
      const auto desc = ModelDescriptor::parse(facts_model);
      if (desc.finite) throw std::invalid_argument("facts need an ordered model");
      const Report r =
          timed([&] { return check_fact(desc.q_model(), fact_id, facts_samples, facts_seed); });
      std::cerr << r.command << ": " << r.elapsed_ms << " ms\n";
      return emit(r, facts_out, false);
    }
    if (*repro_cmd) {
      if (repro_what != "a12") throw std::invalid_argument("unknown repro target '" + repro_what + "'");
      const Report r = timed([&] { return repro_a12(); });
      std::cerr << r.command << ": " << r.elapsed_ms << " ms\n";
      return emit(r, repro_out, true);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
  return 64;
}
