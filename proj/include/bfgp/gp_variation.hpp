#pragma once

#include <vector>

#include "bfgp/gp_eval.hpp"
#include "bfgp/gp_tree.hpp"
#include "bfgp/rng.hpp"

namespace bfgp {

// The five recombination operators. All produce a single offspring; closure
// is guaranteed: offspring violating the depth bound are retried and, past
// the retry limit, replaced by a copy of the first parent.
enum class CrossoverKind {
  SimpleTree,         // independent subtree swap points in both parents
  Uniform,            // per-node donor choice over the common region
  SizeFair,           // donor subtree size capped at 2*removed + 1
  OnePoint,           // one swap point, drawn from the arity-matched region
  ContextPreserving,  // swap points restricted to coordinates valid in both
};

const char* crossover_name(CrossoverKind kind);

inline const std::vector<CrossoverKind>& all_crossover_kinds() {
  static const std::vector<CrossoverKind> kinds = {
      CrossoverKind::SimpleTree, CrossoverKind::Uniform,
      CrossoverKind::SizeFair, CrossoverKind::OnePoint,
      CrossoverKind::ContextPreserving};
  return kinds;
}

GpTree crossover(const GpTree& a, const GpTree& b, CrossoverKind kind,
                 int max_depth, Rng& rng, int retry_limit = 3);

// Replaces one uniformly chosen node by a fresh grown subtree sized to the
// remaining depth budget, so the bound always holds.
GpTree subtree_mutation(const GpTree& t, const TerminalContext& ctx,
                        int max_depth, Rng& rng);

}  // namespace bfgp
