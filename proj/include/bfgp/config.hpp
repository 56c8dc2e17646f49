#pragma once

#include <map>
#include <optional>
#include <string>

#include "bfgp/evaluation.hpp"
#include "bfgp/evolver.hpp"

namespace bfgp {

// command-line / configuration mistakes; mapped to exit code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key = value text, '#' comments. Unknown keys are rejected.
class KeyValueFile {
public:
  static KeyValueFile parse_file(const std::string& path);
  static KeyValueFile parse_text(const std::string& text,
                                 const std::string& origin);

  std::string get_str(const std::string& key, const std::string& fallback);
  int get_int(const std::string& key, int fallback);
  long long get_ll(const std::string& key, long long fallback);
  double get_double(const std::string& key, double fallback);
  uint64_t get_u64(const std::string& key, uint64_t fallback);
  std::optional<int> get_opt_int(const std::string& key);

  void reject_unknown() const;  // throws UsageError listing untouched keys

private:
  std::string origin_;
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> consumed_;
};

// One construction-evolution experiment, identified by the tuple
// (s, n, nl, ev) plus the engine parameters.
struct ExperimentConfig {
  int s = 2;            // seed terminals
  int n = 4;            // seed variable count
  int nl = 4;           // required seed nonlinearity
  FitnessSpec::Kind ev = FitnessSpec::Kind::SumAll;
  int k = 2;            // additional variables
  ObjectiveKind obj = ObjectiveKind::NlWithSpectrum;
  bool bent_seeds = false;
  int groups = 4;
  std::optional<int> target_nl;       // locally-optimal threshold at size n+k
  std::optional<double> fit1_target;  // FirstGroup trigger level

  int population = 500;
  int max_depth = 5;
  double mutation_prob = 0.5;
  long long budget = 50000;
  int runs = 10;
  uint64_t rng_seed = 1;

  int size() const { return n + k; }
  // explicit value, else the construction-chain value for this size, else
  // the concatenation formula 2^n + 2*nl
  int resolved_target_nl() const;
  // explicit value, else best known balanced nonlinearity at size()
  double resolved_fit1_target() const;

  FitnessSpec fitness_spec() const;
  EvolverConfig evolver_config() const;  // ctx left for the caller

  void validate() const;

  static ExperimentConfig from_file(const std::string& path, bool full_scale);
  void apply_scale(bool full_scale);
};

}  // namespace bfgp
