#include "bfgp/gp_generate.hpp"

#include <stdexcept>

namespace bfgp {

namespace {

constexpr Op kFunctionSet[] = {Op::Or,   Op::Xor, Op::And, Op::And2,
                               Op::Xnor, Op::Not, Op::If};
constexpr int kFunctionCount = 7;

NodePtr random_terminal(const TerminalContext& ctx, Rng& rng) {
  int pick = static_cast<int>(rng.below(ctx.k + ctx.s));
  return pick < ctx.k ? var_node(pick) : seed_node(pick - ctx.k);
}

}  // namespace

NodePtr random_subtree(const TerminalContext& ctx, int depth_budget, bool full,
                       Rng& rng) {
  if (depth_budget <= 0) return random_terminal(ctx, rng);
  if (!full) {
    // classic grow: leaf probability proportional to the terminal share
    int terminals = ctx.k + ctx.s;
    if (rng.below(terminals + kFunctionCount) < static_cast<uint64_t>(terminals))
      return random_terminal(ctx, rng);
  }
  Op op = kFunctionSet[rng.below(kFunctionCount)];
  std::vector<NodePtr> kids;
  kids.reserve(arity(op));
  for (int i = 0; i < arity(op); ++i)
    kids.push_back(random_subtree(ctx, depth_budget - 1, full, rng));
  return op_node(op, std::move(kids));
}

GpTree random_tree(const TerminalContext& ctx, int max_depth, Rng& rng) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  int lo = max_depth < 2 ? max_depth : 2;
  int depth = rng.range(lo, max_depth);
  bool full = rng.coin();
  return GpTree(random_subtree(ctx, depth, full, rng));
}

}  // namespace bfgp
