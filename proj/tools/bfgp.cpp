// bfgp: workbench for evolving and analyzing secondary constructions of
// balanced, highly nonlinear Boolean functions.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bfgp/commands.hpp"

namespace {

std::string default_outdir(const std::string& given, const char* command) {
  if (!given.empty()) return given;
  const char* root = std::getenv("BFGP_OUT");
  if (root && *root) return std::string(root) + "/" + command;
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GP workbench for Boolean function constructions"};
  app.require_subcommand(1);

  // evolve-fn --------------------------------------------------------------
  bfgp::EvolveFnOptions fn;
  int fn_obj = 2;
  int fn_target = -1;
  bool fn_full = false;
  std::string fn_out;
  auto* evolve_fn = app.add_subcommand(
      "evolve-fn", "evolve a balanced highly nonlinear Boolean function");
  evolve_fn->add_option("-n,--vars", fn.n, "variable count")->required();
  evolve_fn->add_option("--target-nl", fn_target,
                        "target nonlinearity (default: best known)");
  evolve_fn->add_option("--objective", fn_obj, "1 = nonlinearity only, 2 = with spectrum tie-break");
  evolve_fn->add_option("--population", fn.population, "population size");
  evolve_fn->add_option("--max-depth", fn.max_depth, "maximum tree depth");
  evolve_fn->add_option("--mutation-prob", fn.mutation_prob, "mutation probability");
  evolve_fn->add_option("--budget", fn.budget, "fitness evaluations per run");
  evolve_fn->add_option("--runs", fn.runs, "independent runs");
  evolve_fn->add_option("--rng-seed", fn.rng_seed, "RNG seed");
  evolve_fn->add_option("-j,--jobs", fn.jobs, "parallel runs");
  evolve_fn->add_option("-o,--out", fn_out, "output directory");
  evolve_fn->add_flag("--full-scale", fn_full,
                      "full-size budgets (500000 evaluations, 30 runs)");

  // evolve-cons ------------------------------------------------------------
  std::string cons_config, cons_seed_dir, cons_out;
  int cons_jobs = 1;
  uint64_t cons_seed = 0;
  bool cons_seed_set = false;
  bool cons_full = false;
  auto* evolve_cons = app.add_subcommand(
      "evolve-cons", "evolve constructions over seed-function groups");
  evolve_cons->add_option("-c,--config", cons_config, "experiment config file")
      ->required();
  evolve_cons->add_option("--seed-dir", cons_seed_dir,
                          "load seed groups from this directory");
  evolve_cons
      ->add_option("--rng-seed", cons_seed, "override the config RNG seed")
      ->each([&](const std::string&) { cons_seed_set = true; });
  evolve_cons->add_option("-j,--jobs", cons_jobs, "parallel runs");
  evolve_cons->add_option("-o,--out", cons_out, "output directory");
  evolve_cons->add_flag("--full-scale", cons_full,
                        "full-size budgets (500000 evaluations, 30 runs)");

  // test-cons --------------------------------------------------------------
  bfgp::TestConsOptions tc;
  std::string tc_out;
  std::vector<std::string> tc_overrides;
  auto* test_cons = app.add_subcommand(
      "test-cons", "apply a construction to held-out seed groups");
  test_cons->add_option("-t,--tree", tc.tree_path, "construction tree file")
      ->required();
  test_cons->add_option("--testset", tc.testset_dir,
                        "directory of size_<m> seed-group sets")
      ->required();
  test_cons->add_option("-k,--extra-vars", tc.k, "additional variables");
  test_cons->add_option("--targets", tc.target_mode,
                        "chain | best | formula");
  test_cons->add_option("--target", tc_overrides,
                        "explicit size:nl target (repeatable)");
  test_cons->add_option("-o,--out", tc_out, "output directory for reports");

  // analyze ----------------------------------------------------------------
  bfgp::AnalyzeOptions an;
  std::string an_out, an_scope = "kind";
  auto* analyze = app.add_subcommand(
      "analyze", "size statistics, equivalence classes, simplification");
  analyze->add_option("-d,--trees", an.tree_dir, "directory of .tree files")
      ->required();
  analyze->add_option("-s,--seeds", an.s, "seed terminal count")->required();
  analyze->add_option("-k,--extra-vars", an.k, "additional variables");
  analyze->add_option("--scope", an_scope,
                      "permutation scope: kind | joint");
  analyze->add_flag("--input-negation", an.relation.input_negation,
                    "also allow input negation");
  analyze->add_option("-o,--out", an_out, "output directory");

  // bootstrap --------------------------------------------------------------
  bfgp::BootstrapOptions bs;
  std::string bs_out;
  auto* boot = app.add_subcommand(
      "bootstrap", "feed a construction its own outputs as seeds");
  boot->add_option("-t,--tree", bs.tree_path, "construction tree file")
      ->required();
  boot->add_option("--seeds", bs.seed_dir, "base seed-group directory")
      ->required();
  boot->add_option("-k,--extra-vars", bs.k, "additional variables");
  boot->add_option("--levels", bs.levels, "bootstrap levels");
  boot->add_option("-o,--out", bs_out, "output directory");

  // report / rerun ---------------------------------------------------------
  std::string report_dir;
  auto* report = app.add_subcommand("report", "print a run's artifacts");
  report->add_option("dir", report_dir, "run output directory")->required();

  std::string rerun_manifest, rerun_out;
  auto* rerun = app.add_subcommand("rerun", "re-execute a recorded run");
  rerun->add_option("manifest", rerun_manifest, "manifest.json path")
      ->required();
  rerun->add_option("-o,--out", rerun_out, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (evolve_fn->parsed()) {
      if (fn_target >= 0) fn.target_nl = fn_target;
      fn.obj = fn_obj == 1 ? bfgp::ObjectiveKind::NlOnly
                           : bfgp::ObjectiveKind::NlWithSpectrum;
      if (fn_full) {
        fn.budget = 500000;
        fn.runs = 30;
      }
      fn.outdir = default_outdir(fn_out, "evolve-fn");
      return bfgp::cmd_evolve_fn(fn);
    }
    if (evolve_cons->parsed()) {
      bfgp::EvolveConsOptions opt;
      opt.config = bfgp::ExperimentConfig::from_file(cons_config, cons_full);
      if (cons_seed_set) opt.config.rng_seed = cons_seed;
      opt.seed_dir = cons_seed_dir;
      opt.jobs = cons_jobs;
      opt.outdir = default_outdir(cons_out, "evolve-cons");
      return bfgp::cmd_evolve_cons(opt);
    }
    if (test_cons->parsed()) {
      for (const auto& ov : tc_overrides) {
        size_t colon = ov.find(':');
        if (colon == std::string::npos)
          throw bfgp::UsageError("--target expects size:nl, got " + ov);
        tc.target_overrides[std::stoi(ov.substr(0, colon))] =
            std::stoi(ov.substr(colon + 1));
      }
      tc.outdir = default_outdir(tc_out, "test-cons");
      return bfgp::cmd_test_cons(tc);
    }
    if (analyze->parsed()) {
      if (an_scope == "joint")
        an.relation.scope = bfgp::EquivRelation::Scope::Joint;
      else if (an_scope != "kind")
        throw bfgp::UsageError("--scope must be kind or joint");
      an.outdir = default_outdir(an_out, "analyze");
      return bfgp::cmd_analyze(an);
    }
    if (boot->parsed()) {
      bs.outdir = default_outdir(bs_out, "bootstrap");
      return bfgp::cmd_bootstrap(bs);
    }
    if (report->parsed()) return bfgp::cmd_report(report_dir);
    if (rerun->parsed()) return bfgp::cmd_rerun(rerun_manifest, rerun_out);
  } catch (const bfgp::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
