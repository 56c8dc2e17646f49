#include "bfgp/gp_eval.hpp"

#include <stdexcept>
#include <string>

namespace bfgp {

void TerminalContext::validate() const {
  if (k < 0 || s < 0 || k + s < 1)
    throw std::invalid_argument("terminal context needs at least one terminal");
  if (!seeds.empty()) {
    if (static_cast<int>(seeds.size()) != s)
      throw std::invalid_argument("seed count mismatch: context s=" +
                                  std::to_string(s) + ", got " +
                                  std::to_string(seeds.size()) + " tables");
    int n = seeds[0].n();
    for (const auto& f : seeds)
      if (f.n() != n)
        throw std::invalid_argument("mixed seed sizes in terminal context");
  }
}

TreeEvaluator::TreeEvaluator(TerminalContext ctx) : ctx_(std::move(ctx)) {
  ctx_.validate();
  int total = ctx_.table_vars();
  if (total > TruthTable::kMaxVars)
    throw std::invalid_argument("evaluation table too large: " +
                                std::to_string(total) + " variables");
  var_tables_.reserve(ctx_.k);
  seed_tables_.reserve(ctx_.s);
  if (ctx_.concrete()) {
    int n = ctx_.seed_vars();
    for (int j = 0; j < ctx_.k; ++j)
      var_tables_.push_back(TruthTable::variable(total, n + j));
    for (const auto& f : ctx_.seeds) seed_tables_.push_back(f.lifted(total));
  } else {
    for (int j = 0; j < ctx_.k; ++j)
      var_tables_.push_back(TruthTable::variable(total, j));
    for (int i = 0; i < ctx_.s; ++i)
      seed_tables_.push_back(TruthTable::variable(total, ctx_.k + i));
  }
}

TruthTable TreeEvaluator::eval(const GpNode& node) const {
  switch (node.op) {
    case Op::Var:
      if (node.index >= var_tables_.size())
        throw std::out_of_range("terminal v" + std::to_string(node.index) +
                                " out of range (k=" + std::to_string(ctx_.k) +
                                ")");
      return var_tables_[node.index];
    case Op::Seed:
      if (node.index >= seed_tables_.size())
        throw std::out_of_range("terminal f" + std::to_string(node.index) +
                                " out of range (s=" + std::to_string(ctx_.s) +
                                ")");
      return seed_tables_[node.index];
    case Op::Const:
      return TruthTable::constant(ctx_.table_vars(), node.index != 0);
    case Op::Not:
      return ~eval(*node.kids[0]);
    case Op::Or:
      return eval(*node.kids[0]) | eval(*node.kids[1]);
    case Op::Xor:
      return eval(*node.kids[0]) ^ eval(*node.kids[1]);
    case Op::And:
      return eval(*node.kids[0]) & eval(*node.kids[1]);
    case Op::And2:
      return and_not(eval(*node.kids[0]), eval(*node.kids[1]));
    case Op::Xnor:
      return ~(eval(*node.kids[0]) ^ eval(*node.kids[1]));
    case Op::If:
      return mux(eval(*node.kids[0]), eval(*node.kids[1]),
                 eval(*node.kids[2]));
  }
  throw std::logic_error("unreachable node kind");
}

TruthTable eval_tree(const GpTree& tree, const TerminalContext& ctx) {
  return TreeEvaluator(ctx).eval(tree);
}

}  // namespace bfgp
