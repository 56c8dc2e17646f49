#pragma once

#include <optional>
#include <vector>

#include "bfgp/gp_eval.hpp"
#include "bfgp/gp_tree.hpp"
#include "bfgp/seed_group.hpp"
#include "bfgp/truth_table.hpp"

namespace bfgp {

// Objective value of a resulting Boolean function (maximized):
//   NlOnly:         -BAL + [BAL=0] * Nl
//   NlWithSpectrum: -BAL + [BAL=0] * (Nl + 1 - #max_values / 2^m)
// where #max_values counts spectrum positions at the maximum |W|.
enum class ObjectiveKind { NlOnly, NlWithSpectrum };

double objective(const TruthTable& f, ObjectiveKind kind);

// How per-group objective values combine into a construction's fitness.
struct FitnessSpec {
  enum class Kind {
    FirstGroup,  // val_1, plus the sum of all groups once val_1 triggers
    SumAll,
    MinAll,
  };
  Kind kind = Kind::SumAll;
  double target_val = 0;  // FirstGroup trigger level

  // The trigger fires on val_1 >= target_val; the exact-equality variant is
  // kept switchable because the spectrum-refined objective makes equality
  // with an integer target unreachable.
  bool trigger_exact = false;
  // Whether the triggered sum counts group 1 again on top of val_1.
  bool sum_includes_first = true;
};

FitnessSpec::Kind fitness_kind_from_letter(char letter);  // A, B, C
char fitness_letter(FitnessSpec::Kind kind);

struct FitnessValue {
  double value = 0;
  // One slot per group; FirstGroup leaves groups 2..G unevaluated (nullopt)
  // until the trigger fires.
  std::vector<std::optional<double>> per_group;
  int missing_terminals = 0;
};

// Per-group objective evaluation combined per spec, then divided by
// (1 + missing_terminals) where missing terminals are those among
// v_0..v_{k-1}, f_0..f_{s-1} absent from the tree's leaves.
class ConstructionFitness {
public:
  ConstructionFitness(std::vector<SeedGroup> groups, int k, ObjectiveKind obj,
                      FitnessSpec spec);

  FitnessValue evaluate(const GpTree& tree) const;
  double operator()(const GpTree& tree) const { return evaluate(tree).value; }

  int k() const { return k_; }
  int s() const { return s_; }
  int group_count() const { return static_cast<int>(evaluators_.size()); }
  const FitnessSpec& spec() const { return spec_; }
  ObjectiveKind objective_kind() const { return obj_; }

private:
  int k_;
  int s_;
  ObjectiveKind obj_;
  FitnessSpec spec_;
  std::vector<TreeEvaluator> evaluators_;
};

FitnessValue construction_fitness(const GpTree& tree,
                                  const std::vector<SeedGroup>& groups, int k,
                                  ObjectiveKind obj, const FitnessSpec& spec);

}  // namespace bfgp
