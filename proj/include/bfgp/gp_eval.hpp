#pragma once

#include <vector>

#include "bfgp/gp_tree.hpp"
#include "bfgp/truth_table.hpp"

namespace bfgp {

// Terminal environment of a tree: k additional variables v_0..v_{k-1} and s
// seed terminals f_0..f_{s-1}. With concrete seed tables the tree denotes an
// (n+k)-variable function (seed inputs on the low n index bits, v_j on index
// position n+j). With no seeds bound, every terminal is a free input and the
// tree denotes its abstract (s+k)-variable table (v_j on position j, f_i on
// position k+i). Plain function evolution is the abstract mode with s = 0.
struct TerminalContext {
  int k = 2;
  int s = 2;
  std::vector<TruthTable> seeds;  // empty = abstract mode

  bool concrete() const { return !seeds.empty(); }
  int seed_vars() const { return seeds.empty() ? 0 : seeds[0].n(); }
  int table_vars() const { return concrete() ? seed_vars() + k : s + k; }
  void validate() const;  // throws on shape violations
};

// Word-parallel tree evaluation with the terminal tables precomputed once.
class TreeEvaluator {
public:
  explicit TreeEvaluator(TerminalContext ctx);

  const TerminalContext& context() const { return ctx_; }
  TruthTable eval(const GpNode& node) const;
  TruthTable eval(const GpTree& tree) const { return eval(tree.root()); }

private:
  TerminalContext ctx_;
  std::vector<TruthTable> var_tables_;
  std::vector<TruthTable> seed_tables_;
};

TruthTable eval_tree(const GpTree& tree, const TerminalContext& ctx);

}  // namespace bfgp
