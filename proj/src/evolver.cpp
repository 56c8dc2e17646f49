#include "bfgp/evolver.hpp"

#include <atomic>
#include <memory>
#include <stdexcept>
#include <thread>

#include "bfgp/gp_generate.hpp"

namespace bfgp {

void EvolverConfig::validate() const {
  if (population_size < 3)
    throw std::invalid_argument("population size must be >= 3");
  if (mutation_prob < 0 || mutation_prob > 1)
    throw std::invalid_argument("mutation probability out of [0,1]");
  if (budget < population_size)
    throw std::invalid_argument("budget smaller than the initial population");
  if (max_depth < 1) throw std::invalid_argument("max depth must be >= 1");
  if (crossover_kinds.empty())
    throw std::invalid_argument("no crossover kinds configured");
  ctx.validate();
}

namespace {

struct Individual {
  GpTree tree;
  double fitness;
};

}  // namespace

RunResult run(const EvolverConfig& config, const FitnessFn& fitness, Rng& rng,
              const ProgressFn& progress) {
  config.validate();

  std::vector<Individual> pop;
  pop.reserve(config.population_size);
  long long evals = 0;

  int best = 0;
  std::vector<std::pair<long long, double>> history;

  for (int i = 0; i < config.population_size; ++i) {
    GpTree tree = random_tree(config.ctx, config.max_depth, rng);
    double fit = fitness(tree);
    ++evals;
    pop.push_back({std::move(tree), fit});
    if (pop[i].fitness > pop[best].fitness) best = i;
  }
  // the best-ever individual is kept outside the population from here on
  Individual best_ever = pop[best];
  long long init_cost = config.init_counts_toward_budget
                            ? 0
                            : static_cast<long long>(config.population_size);
  history.emplace_back(evals - init_cost, best_ever.fitness);
  if (progress)
    progress(evals - init_cost, best_ever.fitness, best_ever.tree.size());

  while (evals - init_cost < config.budget) {
    // tournament of 3 distinct slots
    int slot[3];
    slot[0] = static_cast<int>(rng.below(pop.size()));
    do {
      slot[1] = static_cast<int>(rng.below(pop.size()));
    } while (slot[1] == slot[0]);
    do {
      slot[2] = static_cast<int>(rng.below(pop.size()));
    } while (slot[2] == slot[0] || slot[2] == slot[1]);

    double worst_fit = pop[slot[0]].fitness;
    for (int i = 1; i < 3; ++i)
      if (pop[slot[i]].fitness < worst_fit) worst_fit = pop[slot[i]].fitness;
    int ties[3];
    int tie_count = 0;
    for (int i = 0; i < 3; ++i)
      if (pop[slot[i]].fitness == worst_fit) ties[tie_count++] = i;
    int loser = ties[tie_count == 1 ? 0 : rng.below(tie_count)];

    // survivors in draw order
    int pa = slot[loser == 0 ? 1 : 0];
    int pb = slot[loser == 2 ? 1 : 2];

    CrossoverKind kind =
        config.crossover_kinds[rng.below(config.crossover_kinds.size())];
    GpTree child = crossover(pop[pa].tree, pop[pb].tree, kind,
                             config.max_depth, rng, config.depth_retry_limit);
    if (rng.chance(config.mutation_prob))
      child = subtree_mutation(child, config.ctx, config.max_depth, rng);

    double fit = fitness(child);
    ++evals;
    pop[slot[loser]] = {std::move(child), fit};
    if (fit > best_ever.fitness) {
      best_ever = pop[slot[loser]];
      history.emplace_back(evals - init_cost, best_ever.fitness);
      if (progress)
        progress(evals - init_cost, best_ever.fitness, best_ever.tree.size());
    }
  }

  return RunResult{std::move(best_ever.tree), best_ever.fitness, evals,
                   std::move(history), 0};
}

std::vector<RunResult> run_batch(
    const EvolverConfig& config, const FitnessFn& fitness, int jobs,
    const std::function<void(int, long long, double, int)>& progress) {
  config.validate();
  int runs = config.runs;
  std::vector<std::unique_ptr<RunResult>> slots(runs);

  auto one = [&](int i) {
    uint64_t seed = Rng::derive(config.rng_seed, static_cast<uint64_t>(i));
    Rng rng(seed);
    ProgressFn hook = nullptr;
    if (progress)
      hook = [&, i](long long evals, double best, int size) {
        progress(i, evals, best, size);
      };
    RunResult r = run(config, fitness, rng, hook);
    r.rng_seed = seed;
    slots[i] = std::make_unique<RunResult>(std::move(r));
  };

  if (jobs <= 1) {
    for (int i = 0; i < runs; ++i) one(i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= runs) return;
        one(i);
      }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min(jobs, runs);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<RunResult> out;
  out.reserve(runs);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace bfgp
