#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bfgp/gp_eval.hpp"
#include "bfgp/gp_tree.hpp"
#include "bfgp/gp_variation.hpp"
#include "bfgp/rng.hpp"

namespace bfgp {

struct EvolverConfig {
  TerminalContext ctx;
  int population_size = 500;
  int max_depth = 5;
  double mutation_prob = 0.5;
  long long budget = 500000;  // total fitness evaluations per run
  int runs = 30;
  uint64_t rng_seed = 1;
  std::vector<CrossoverKind> crossover_kinds = all_crossover_kinds();
  bool init_counts_toward_budget = true;
  int depth_retry_limit = 3;

  void validate() const;
};

struct RunResult {
  GpTree best_tree;
  double best_fitness;
  long long evaluations_used;
  // (evaluation index, best-so-far) recorded at initialization and on every
  // improvement; non-decreasing in the second component
  std::vector<std::pair<long long, double>> fitness_history;
  uint64_t rng_seed;
};

using FitnessFn = std::function<double(const GpTree&)>;
// observer of (evaluation index, best fitness so far, best tree size)
using ProgressFn = std::function<void(long long, double, int)>;

// Steady-state loop: 3-tournament elimination of the worst (ties broken
// uniformly), offspring by a uniformly chosen crossover of the two
// survivors, mutation with mutation_prob, inserted in the vacated slot.
// Runs until the evaluation budget is spent.
RunResult run(const EvolverConfig& config, const FitnessFn& fitness, Rng& rng,
              const ProgressFn& progress = nullptr);

// config.runs independent runs; run i uses the stream derived from
// (config.rng_seed, i), so results are identical whether executed serially
// or on `jobs` threads. The fitness callback must be safe for concurrent
// use. Results are ordered by run index.
std::vector<RunResult> run_batch(
    const EvolverConfig& config, const FitnessFn& fitness, int jobs = 1,
    const std::function<void(int, long long, double, int)>& progress = nullptr);

}  // namespace bfgp
