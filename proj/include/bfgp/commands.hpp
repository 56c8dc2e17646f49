#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bfgp/analysis.hpp"
#include "bfgp/config.hpp"

namespace bfgp {

// Exit codes shared by all commands: 0 success / verdict general,
// 1 target unmet / verdict not general, 2 usage or config error (thrown as
// UsageError and mapped by the CLI).

struct EvolveFnOptions {
  int n = 6;
  std::optional<int> target_nl;  // default: best known for n
  ObjectiveKind obj = ObjectiveKind::NlWithSpectrum;
  int population = 500;
  int max_depth = 5;
  double mutation_prob = 0.5;
  long long budget = 50000;
  int runs = 10;
  uint64_t rng_seed = 1;
  std::string outdir;
  int jobs = 1;
};
int cmd_evolve_fn(const EvolveFnOptions& opt);

struct EvolveConsOptions {
  ExperimentConfig config;
  std::string seed_dir;  // when set, seeds load from disk instead
  std::string outdir;
  int jobs = 1;
};
int cmd_evolve_cons(const EvolveConsOptions& opt);

struct TestConsOptions {
  std::string tree_path;
  std::string testset_dir;  // size_<m> subdirectories of seed groups
  int k = 2;
  // "chain" (construction-chain values), "best" (best known balanced),
  // "formula" (2^n + 2*seed_nl from each set's declared seeds)
  std::string target_mode = "chain";
  std::map<int, int> target_overrides;  // by resulting size
  std::string outdir;  // optional; report files written when set
};
int cmd_test_cons(const TestConsOptions& opt);

struct AnalyzeOptions {
  std::string tree_dir;
  int s = 2;
  int k = 2;
  EquivRelation relation;
  std::string outdir;
};
int cmd_analyze(const AnalyzeOptions& opt);

struct BootstrapOptions {
  std::string tree_path;
  std::string seed_dir;
  int k = 2;
  int levels = 1;
  std::string outdir;
};
int cmd_bootstrap(const BootstrapOptions& opt);

int cmd_report(const std::string& dir);

// Re-executes the command recorded in a manifest, writing to outdir;
// artifacts are byte-identical to the original run's.
int cmd_rerun(const std::string& manifest_path, const std::string& outdir);

}  // namespace bfgp
