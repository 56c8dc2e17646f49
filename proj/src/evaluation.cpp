#include "bfgp/evaluation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bfgp/walsh.hpp"

namespace bfgp {

double objective(const TruthTable& f, ObjectiveKind kind) {
  int64_t bal = balancedness_penalty(f);
  if (bal != 0) return -static_cast<double>(bal);
  WalshSpectrum w = walsh_transform(f);
  double value = nonlinearity(w);
  if (kind == ObjectiveKind::NlWithSpectrum)
    value += 1.0 - static_cast<double>(w.count_max_abs()) /
                       static_cast<double>(f.size());
  return value;
}

FitnessSpec::Kind fitness_kind_from_letter(char letter) {
  switch (letter) {
    case 'A':
    case 'a':
      return FitnessSpec::Kind::FirstGroup;
    case 'B':
    case 'b':
      return FitnessSpec::Kind::SumAll;
    case 'C':
    case 'c':
      return FitnessSpec::Kind::MinAll;
  }
  throw std::invalid_argument(std::string("unknown fitness kind '") + letter +
                              "' (expected A, B or C)");
}

char fitness_letter(FitnessSpec::Kind kind) {
  switch (kind) {
    case FitnessSpec::Kind::FirstGroup:
      return 'A';
    case FitnessSpec::Kind::SumAll:
      return 'B';
    case FitnessSpec::Kind::MinAll:
      return 'C';
  }
  return '?';
}

ConstructionFitness::ConstructionFitness(std::vector<SeedGroup> groups, int k,
                                         ObjectiveKind obj, FitnessSpec spec)
    : k_(k), obj_(obj), spec_(spec) {
  if (groups.empty())
    throw std::invalid_argument("construction fitness needs >= 1 seed group");
  s_ = groups[0].s();
  int n = groups[0].n();
  for (const auto& g : groups) {
    if (g.s() != s_ || g.n() != n)
      throw std::invalid_argument(
          "seed groups disagree in shape: expected s=" + std::to_string(s_) +
          " n=" + std::to_string(n) + ", got s=" + std::to_string(g.s()) +
          " n=" + std::to_string(g.n()));
  }
  evaluators_.reserve(groups.size());
  for (auto& g : groups) {
    TerminalContext ctx;
    ctx.k = k_;
    ctx.s = s_;
    ctx.seeds = std::move(g.seeds);
    evaluators_.emplace_back(std::move(ctx));
  }
}

FitnessValue ConstructionFitness::evaluate(const GpTree& tree) const {
  FitnessValue out;
  out.per_group.assign(evaluators_.size(), std::nullopt);

  TerminalUsage used = terminal_usage(tree.root());
  uint32_t var_mask = (k_ >= 32 ? ~0u : ((1u << k_) - 1));
  uint32_t seed_mask = (s_ >= 32 ? ~0u : ((1u << s_) - 1));
  out.missing_terminals = (k_ - std::popcount(used.vars & var_mask)) +
                          (s_ - std::popcount(used.seeds & seed_mask));

  auto eval_group = [&](size_t i) {
    double v = objective(evaluators_[i].eval(tree), obj_);
    out.per_group[i] = v;
    return v;
  };

  double raw = 0;
  switch (spec_.kind) {
    case FitnessSpec::Kind::FirstGroup: {
      double first = eval_group(0);
      bool triggered = spec_.trigger_exact ? first == spec_.target_val
                                           : first >= spec_.target_val;
      raw = first;
      if (triggered) {
        double sum = spec_.sum_includes_first ? first : 0.0;
        for (size_t i = 1; i < evaluators_.size(); ++i) sum += eval_group(i);
        raw += sum;
      }
      break;
    }
    case FitnessSpec::Kind::SumAll: {
      for (size_t i = 0; i < evaluators_.size(); ++i) raw += eval_group(i);
      break;
    }
    case FitnessSpec::Kind::MinAll: {
      raw = eval_group(0);
      for (size_t i = 1; i < evaluators_.size(); ++i)
        raw = std::min(raw, eval_group(i));
      break;
    }
  }
  out.value = raw / (1 + out.missing_terminals);
  return out;
}

FitnessValue construction_fitness(const GpTree& tree,
                                  const std::vector<SeedGroup>& groups, int k,
                                  ObjectiveKind obj, const FitnessSpec& spec) {
  return ConstructionFitness(groups, k, obj, spec).evaluate(tree);
}

}  // namespace bfgp
