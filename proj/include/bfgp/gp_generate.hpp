#pragma once

#include "bfgp/gp_eval.hpp"
#include "bfgp/gp_tree.hpp"
#include "bfgp/rng.hpp"

namespace bfgp {

// Ramped half-and-half initialization: target depth uniform over
// 2..max_depth (collapsing when max_depth < 2), full or grow method by coin
// flip. Grow may return a bare terminal.
GpTree random_tree(const TerminalContext& ctx, int max_depth, Rng& rng);

// Random subtree of depth <= depth_budget (grow method); the building block
// of mutation and initialization.
NodePtr random_subtree(const TerminalContext& ctx, int depth_budget, bool full,
                       Rng& rng);

}  // namespace bfgp
