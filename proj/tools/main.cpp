// Command-line front end: slopes, minimal slopes, canonical filtrations,
// duals, tensors, isotypic decompositions, the tensor-multiplicativity check
// with its index-diagram audit, and seeded fuzz campaigns.
//
// Exit codes: 0 success (and verdict "equal"), 1 input error, 2 property
// violation (fuzz failure or a strictly-less verdict).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "latslope/fuzz.hpp"

namespace ls = latslope;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

std::string slope_text(const ls::SlopeValue& s) {
  return "(" + ls::rat_to_string(s.vol_sq) + ", " + std::to_string(s.rank) +
         ") ~ " + std::to_string(s.approx());
}

ls::LoadedLattice load(const std::string& path) {
  return ls::load_lattice_file(path);
}

ls::GroupAction require_action(const ls::LoadedLattice& l, const std::string& path) {
  if (!l.action)
    throw ls::InputError(path + " carries no group_generators");
  return *l.action;
}

void write_or_print(const std::string& json, const std::string& path) {
  if (path.empty()) {
    std::cout << json << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw ls::InputError("cannot write " + path);
  out << json << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact slopes, canonical filtrations and tensor products of "
               "Euclidean lattices"};
  app.require_subcommand(1);

  std::string path_a, path_b, out_path, json_path, csv_path, method = "auto";
  std::uint64_t seed = 1;
  unsigned trials = 100;
  bool with_audit = false;

  auto* cmd_slope = app.add_subcommand("slope", "slope of a lattice");
  cmd_slope->add_option("lattice", path_a)->required();

  auto* cmd_mumin = app.add_subcommand("mumin", "minimal slope");
  cmd_mumin->add_option("lattice", path_a)->required();
  cmd_mumin->add_option("--method", method, "brute|invariant|auto");

  auto* cmd_filt = app.add_subcommand("filtration", "canonical filtration");
  cmd_filt->add_option("lattice", path_a)->required();
  cmd_filt->add_option("--json", json_path, "write the report to a file");

  auto* cmd_ss = app.add_subcommand("semistable", "semistability verdict");
  cmd_ss->add_option("lattice", path_a)->required();

  auto* cmd_dual = app.add_subcommand("dual", "dual lattice");
  cmd_dual->add_option("lattice", path_a)->required();
  cmd_dual->add_option("-o,--output", out_path);

  auto* cmd_tensor = app.add_subcommand("tensor", "tensor product");
  cmd_tensor->add_option("lattice_a", path_a)->required();
  cmd_tensor->add_option("lattice_b", path_b)->required();
  cmd_tensor->add_option("-o,--output", out_path)->required();

  auto* cmd_dec = app.add_subcommand("decompose", "isotypic decomposition");
  cmd_dec->add_option("lattice", path_a)->required();

  auto* cmd_conj = app.add_subcommand("conjecture",
                                      "tensor multiplicativity check");
  cmd_conj->add_option("lattice_a", path_a)->required();
  cmd_conj->add_option("lattice_b", path_b)->required();
  cmd_conj->add_flag("--audit", with_audit, "run the index-diagram audit");
  cmd_conj->add_option("--json", json_path, "write the report to a file");

  auto* cmd_fuzz = app.add_subcommand("fuzz", "seeded property campaigns");
  std::string campaign;
  cmd_fuzz->add_option("campaign", campaign,
                       "parallelogram|lemma-x|bost-chen|identities")
      ->required();
  cmd_fuzz->add_option("--seed", seed);
  cmd_fuzz->add_option("--trials", trials);
  cmd_fuzz->add_option("--csv", csv_path, "append the summary to a CSV file");

  auto* cmd_corpus = app.add_subcommand("corpus", "named lattice corpus");
  std::string corpus_op, corpus_name;
  cmd_corpus->add_option("op", corpus_op, "list|emit")->required();
  cmd_corpus->add_option("name", corpus_name);
  cmd_corpus->add_option("-o,--output", out_path);

  CLI11_PARSE(app, argc, argv);

  if (cmd_slope->parsed()) {
    auto l = load(path_a);
    std::cout << slope_text(ls::slope(l.lattice)) << "\n";
    return kExitOk;
  }

  if (cmd_mumin->parsed()) {
    auto l = load(path_a);
    ls::MinSlopeResult res = [&] {
      if (method == "brute") return ls::min_slope_bruteforce(l.lattice);
      if (method == "invariant")
        return ls::min_slope_invariant(l.lattice, require_action(l, path_a));
      if (method != "auto") throw ls::InputError("unknown method " + method);
      if (l.action) {
        auto dec = ls::isotypic_decompose(*l.action);
        if (dec.multiplicity_free())
          return ls::min_slope_invariant(l.lattice, dec);
      }
      return ls::min_slope_bruteforce(l.lattice);
    }();
    std::cout << slope_text(res.value) << "\n";
    return kExitOk;
  }

  if (cmd_filt->parsed()) {
    auto l = load(path_a);
    auto f = ls::canonical_filtration(l.lattice);
    std::cout << "steps:";
    for (const auto& s : f.steps) std::cout << " " << s.rank();
    std::cout << "\nquotient slopes:";
    for (const auto& s : f.quotient_slopes) std::cout << " " << slope_text(s);
    std::cout << "\n";
    if (!json_path.empty()) write_or_print(ls::filtration_to_json(f), json_path);
    return kExitOk;
  }

  if (cmd_ss->parsed()) {
    auto l = load(path_a);
    auto rep = ls::is_semistable(l.lattice);
    std::cout << (rep.semistable ? "semistable" : "not semistable") << "  mu "
              << slope_text(rep.mu) << "  mu_min " << slope_text(rep.mu_min)
              << "\n";
    return kExitOk;
  }

  if (cmd_dual->parsed()) {
    auto l = load(path_a);
    write_or_print(ls::lattice_to_json(ls::dual(l.lattice)), out_path);
    return kExitOk;
  }

  if (cmd_tensor->parsed()) {
    auto a = load(path_a);
    auto b = load(path_b);
    ls::Lattice t = ls::tensor(a.lattice, b.lattice);
    if (a.action && b.action) {
      auto prod = ls::product_action(*a.action, *b.action);
      ls::save_lattice_file(out_path, t, &prod.generators);
    } else {
      ls::save_lattice_file(out_path, t);
    }
    std::cout << "wrote " << out_path << " (rank " << t.rank() << ")\n";
    return kExitOk;
  }

  if (cmd_dec->parsed()) {
    auto l = load(path_a);
    auto dec = ls::isotypic_decompose(require_action(l, path_a));
    switch (dec.status) {
      case ls::MfStatus::MultiplicityFree:
        std::cout << "multiplicity-free, r = " << dec.r() << ", dims:";
        for (const auto& c : dec.components) std::cout << " " << c.dim();
        std::cout << "\n";
        break;
      case ls::MfStatus::NotMultiplicityFree:
        std::cout << "not multiplicity-free: " << dec.failure_stage << "\n";
        break;
      case ls::MfStatus::Inconclusive:
        std::cout << "inconclusive: " << dec.failure_stage << "\n";
        break;
    }
    return kExitOk;
  }

  if (cmd_conj->parsed()) {
    auto a = load(path_a);
    auto b = load(path_b);
    auto rep = ls::conjecture_check(a.lattice, require_action(a, path_a),
                                    b.lattice, require_action(b, path_b));
    bool equal = rep.verdict == ls::Verdict::Equal;
    std::cout << (equal ? "Equal" : "StrictlyLess (CANDIDATE COUNTEREXAMPLE)")
              << "\n  mu_min(L)   " << slope_text(rep.mu_min_l)
              << "\n  mu_min(M)   " << slope_text(rep.mu_min_m)
              << "\n  mu_min(LxM) " << slope_text(rep.mu_min_tensor)
              << "\n  product     " << slope_text(rep.product) << "\n";
    if (!json_path.empty()) write_or_print(ls::conjecture_to_json(rep), json_path);
    if (with_audit) {
      auto audit = ls::theorem_audit(a.lattice, require_action(a, path_a),
                                     b.lattice, require_action(b, path_b));
      std::cout << ls::audit_to_json(audit) << "\n";
      if (audit.applicable && !audit.all_passed()) return kExitViolation;
    }
    return equal ? kExitOk : kExitViolation;
  }

  if (cmd_fuzz->parsed()) {
    ls::FuzzConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    ls::FuzzOutcome outcome;
    if (campaign == "parallelogram")
      outcome = ls::parallelogram_campaign(cfg);
    else if (campaign == "lemma-x")
      outcome = ls::lemma_x_campaign(cfg);
    else if (campaign == "bost-chen")
      outcome = ls::bost_chen_campaign(cfg);
    else if (campaign == "identities")
      outcome = ls::identities_campaign(cfg);
    else
      throw ls::InputError("unknown campaign " + campaign);
    std::cout << outcome.trials - outcome.failures << "/" << outcome.trials
              << " OK\n";
    if (!csv_path.empty()) {
      std::ofstream csv(csv_path, std::ios::app);
      csv << ls::fuzz_summary_csv(outcome);
    }
    for (const auto& f : outcome.failure_details) {
      std::string path = "fuzz_" + outcome.campaign + "_fail_" +
                         std::to_string(f.trial) + ".json";
      std::ofstream out(path);
      out << f.reproducer_json << "\n";
      std::cerr << "reproducer written to " << path << "\n";
    }
    return outcome.ok() ? kExitOk : kExitViolation;
  }

  if (cmd_corpus->parsed()) {
    if (corpus_op == "list") {
      for (const auto& n : ls::corpus_names()) std::cout << n << "\n";
      return kExitOk;
    }
    if (corpus_op == "emit") {
      if (corpus_name.empty()) throw ls::InputError("corpus emit needs a name");
      auto entry = ls::corpus(corpus_name);
      std::string path = out_path.empty() ? corpus_name + ".json" : out_path;
      const std::vector<ls::IntMatrix>* gens =
          entry.action ? &entry.action->generators : nullptr;
      ls::save_lattice_file(path, entry.lattice, gens);
      std::cout << "wrote " << path << "\n";
      return kExitOk;
    }
    throw ls::InputError("corpus op must be list or emit");
  }

  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ls::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ls::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
