#include "bfgp/analysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "bfgp/gp_eval.hpp"

namespace bfgp {

int EssentialSet::vars_used() const { return std::popcount(var_mask); }
int EssentialSet::seeds_used() const { return std::popcount(seed_mask); }

AbstractFunction abstractize(const GpTree& tree, int s, int k) {
  if (s + k > kMaxAbstractInputs)
    throw std::invalid_argument("abstract table too large: " +
                                std::to_string(s + k) + " inputs");
  TerminalContext ctx;
  ctx.k = k;
  ctx.s = s;
  AbstractFunction a;
  a.k = k;
  a.s = s;
  a.table = eval_tree(tree, ctx);
  return a;
}

EssentialSet essential_terminals(const AbstractFunction& a) {
  EssentialSet out;
  int m = a.inputs();
  for (int p = 0; p < m; ++p) {
    uint64_t step = uint64_t{1} << p;
    bool depends = false;
    for (uint64_t x = 0; x < a.table.size() && !depends; ++x)
      if (!(x & step)) depends = a.table.get(x) != a.table.get(x | step);
    if (!depends) continue;
    if (p < a.k)
      out.var_mask |= uint32_t{1} << p;
    else
      out.seed_mask |= uint32_t{1} << (p - a.k);
  }
  return out;
}

AbstractFunction restrict_to_essential(const AbstractFunction& a) {
  EssentialSet ess = essential_terminals(a);
  std::vector<int> positions;
  for (int p = 0; p < a.inputs(); ++p) {
    bool keep = p < a.k ? ess.var(p) : ess.seed(p - a.k);
    if (keep) positions.push_back(p);
  }
  AbstractFunction out;
  out.k = ess.vars_used();
  out.s = ess.seeds_used();
  if (positions.empty()) {
    // a constant function; keep a one-input table so it stays representable
    out.k = 1;
    out.s = 0;
    out.table = TruthTable::constant(1, a.table.get(0));
    return out;
  }
  out.table = TruthTable(static_cast<int>(positions.size()));
  for (uint64_t r = 0; r < out.table.size(); ++r) {
    uint64_t full = 0;
    for (size_t i = 0; i < positions.size(); ++i)
      if ((r >> i) & 1) full |= uint64_t{1} << positions[i];
    out.table.set(r, a.table.get(full));
  }
  return out;
}

namespace {

constexpr int kMaxPermutedInputs = 8;

// input p of the original reads bit rho[p] of the transformed index
std::vector<std::vector<int>> relabelings(int k, int s,
                                          EquivRelation::Scope scope) {
  std::vector<std::vector<int>> out;
  int m = k + s;
  if (m > kMaxPermutedInputs)
    throw std::invalid_argument("too many inputs for equivalence search: " +
                                std::to_string(m));
  if (scope == EquivRelation::Scope::Joint) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }
  std::vector<int> pv(k), pf(s);
  std::iota(pv.begin(), pv.end(), 0);
  std::iota(pf.begin(), pf.end(), k);
  do {
    do {
      std::vector<int> perm;
      perm.reserve(m);
      perm.insert(perm.end(), pv.begin(), pv.end());
      perm.insert(perm.end(), pf.begin(), pf.end());
      out.push_back(perm);
    } while (std::next_permutation(pf.begin(), pf.end()));
  } while (std::next_permutation(pv.begin(), pv.end()));
  return out;
}

TruthTable apply_transform(const TruthTable& t, const std::vector<int>& rho,
                           uint32_t input_neg, bool output_neg) {
  int m = t.n();
  TruthTable out(m);
  for (uint64_t x = 0; x < t.size(); ++x) {
    uint64_t y = 0;
    for (int p = 0; p < m; ++p) {
      uint64_t bit = ((x >> rho[p]) & 1) ^ ((input_neg >> p) & 1);
      y |= bit << p;
    }
    out.set(x, t.get(y) ^ output_neg);
  }
  return out;
}

template <typename Visit>
void for_each_transform(const AbstractFunction& a, const EquivRelation& rel,
                        Visit&& visit) {
  auto perms = relabelings(a.k, a.s, rel.scope);
  uint32_t neg_limit = rel.input_negation ? (uint32_t{1} << a.inputs()) : 1;
  for (const auto& rho : perms)
    for (uint32_t neg = 0; neg < neg_limit; ++neg) {
      if (visit(apply_transform(a.table, rho, neg, false))) return;
      if (rel.output_negation &&
          visit(apply_transform(a.table, rho, neg, true)))
        return;
    }
}

}  // namespace

bool equivalent(const AbstractFunction& a, const AbstractFunction& b,
                const EquivRelation& relation) {
  if (a.k != b.k || a.s != b.s)
    throw std::invalid_argument("abstract functions differ in shape");
  bool found = false;
  for_each_transform(a, relation, [&](const TruthTable& t) {
    found = (t == b.table);
    return found;
  });
  return found;
}

TruthTable canonical_form(const AbstractFunction& a,
                          const EquivRelation& relation) {
  TruthTable best = a.table;
  for_each_transform(a, relation, [&](const TruthTable& t) {
    if (t < best) best = t;
    return false;
  });
  return best;
}

int EquivalenceGraph::max_class_size() const {
  int best = 0;
  for (const auto& c : classes) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

EquivalenceGraph equivalence_graph(const std::vector<GpTree>& trees, int s,
                                   int k, const EquivRelation& relation) {
  EquivalenceGraph graph;
  graph.nodes = static_cast<int>(trees.size());
  graph.adjacency.assign(graph.nodes, std::vector<uint8_t>(graph.nodes, 0));

  // the relation's transformations form a group, so equal canonical forms
  // decide exactly the pairwise relation
  std::vector<TruthTable> canon;
  canon.reserve(trees.size());
  for (const auto& t : trees)
    canon.push_back(canonical_form(abstractize(t, s, k), relation));

  std::vector<int> klass(graph.nodes, -1);
  for (int i = 0; i < graph.nodes; ++i) {
    if (klass[i] >= 0) continue;
    klass[i] = static_cast<int>(graph.classes.size());
    graph.classes.push_back({i});
    for (int j = i + 1; j < graph.nodes; ++j)
      if (klass[j] < 0 && canon[j] == canon[i]) {
        klass[j] = klass[i];
        graph.classes.back().push_back(j);
      }
  }
  for (int i = 0; i < graph.nodes; ++i)
    for (int j = 0; j < graph.nodes; ++j)
      graph.adjacency[i][j] = klass[i] == klass[j] ? 1 : 0;
  return graph;
}

SizeStats size_stats(const std::vector<GpTree>& trees) {
  SizeStats stats;
  if (trees.empty()) return stats;
  for (const auto& t : trees) stats.values.push_back(t.size());
  std::vector<int> sorted = stats.values;
  std::sort(sorted.begin(), sorted.end());
  stats.min = sorted.front();
  stats.max = sorted.back();
  auto quantile = [&](double q) {
    double pos = q * (sorted.size() - 1);
    size_t lo = static_cast<size_t>(pos);
    double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return static_cast<double>(sorted[lo]);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
  };
  stats.q1 = quantile(0.25);
  stats.median = quantile(0.5);
  stats.q3 = quantile(0.75);
  return stats;
}

// ---------------------------------------------------------------------------
// simplifier

namespace {

bool is_const(const NodePtr& n, bool value) {
  return n->op == Op::Const && (n->index != 0) == value;
}

bool is_literal(const NodePtr& n) {
  return n->op == Op::Var || n->op == Op::Seed;
}

NodePtr substitute_literal(const NodePtr& n, Op op, int index, bool value) {
  if (n->op == op && n->index == index) return const_node(value);
  if (n->kids.empty()) return n;
  std::vector<NodePtr> kids;
  kids.reserve(n->kids.size());
  bool changed = false;
  for (const auto& kid : n->kids) {
    NodePtr r = substitute_literal(kid, op, index, value);
    changed |= (r != kid);
    kids.push_back(std::move(r));
  }
  return changed ? op_node(n->op, std::move(kids)) : n;
}

bool contains_literal(const NodePtr& n, Op op, int index) {
  if (n->op == op && n->index == index) return true;
  for (const auto& kid : n->kids)
    if (contains_literal(kid, op, index)) return true;
  return false;
}

// one local rewrite step; returns the node unchanged when no rule applies
NodePtr local_rules(const NodePtr& n) {
  const auto& kids = n->kids;
  switch (n->op) {
    case Op::Not: {
      const NodePtr& a = kids[0];
      if (a->op == Op::Const) return const_node(a->index == 0);
      if (a->op == Op::Not) return a->kids[0];
      if (a->op == Op::Xor) return op_node(Op::Xnor, {a->kids[0], a->kids[1]});
      if (a->op == Op::Xnor) return op_node(Op::Xor, {a->kids[0], a->kids[1]});
      break;
    }
    case Op::Or: {
      const NodePtr &a = kids[0], &b = kids[1];
      if (is_const(a, false)) return b;
      if (is_const(b, false)) return a;
      if (is_const(a, true) || is_const(b, true)) return const_node(true);
      if (same_tree(*a, *b)) return a;
      break;
    }
    case Op::And: {
      const NodePtr &a = kids[0], &b = kids[1];
      if (is_const(a, false) || is_const(b, false)) return const_node(false);
      if (is_const(a, true)) return b;
      if (is_const(b, true)) return a;
      if (same_tree(*a, *b)) return a;
      if (b->op == Op::Not) return op_node(Op::And2, {a, b->kids[0]});
      if (a->op == Op::Not) return op_node(Op::And2, {b, a->kids[0]});
      break;
    }
    case Op::And2: {  // a AND (NOT b)
      const NodePtr &a = kids[0], &b = kids[1];
      if (is_const(a, false) || is_const(b, true)) return const_node(false);
      if (is_const(b, false)) return a;
      if (is_const(a, true)) return op_node(Op::Not, {b});
      if (same_tree(*a, *b)) return const_node(false);
      if (b->op == Op::Not) return op_node(Op::And, {a, b->kids[0]});
      break;
    }
    case Op::Xor: {
      const NodePtr &a = kids[0], &b = kids[1];
      if (is_const(a, false)) return b;
      if (is_const(b, false)) return a;
      if (is_const(a, true)) return op_node(Op::Not, {b});
      if (is_const(b, true)) return op_node(Op::Not, {a});
      if (same_tree(*a, *b)) return const_node(false);
      if (a->op == Op::Not) return op_node(Op::Xnor, {a->kids[0], b});
      if (b->op == Op::Not) return op_node(Op::Xnor, {a, b->kids[0]});
      break;
    }
    case Op::Xnor: {
      const NodePtr &a = kids[0], &b = kids[1];
      if (is_const(a, true)) return b;
      if (is_const(b, true)) return a;
      if (is_const(a, false)) return op_node(Op::Not, {b});
      if (is_const(b, false)) return op_node(Op::Not, {a});
      if (same_tree(*a, *b)) return const_node(true);
      if (a->op == Op::Not) return op_node(Op::Xor, {a->kids[0], b});
      if (b->op == Op::Not) return op_node(Op::Xor, {a, b->kids[0]});
      break;
    }
    case Op::If: {
      const NodePtr &c = kids[0], &t = kids[1], &e = kids[2];
      if (is_const(c, true)) return t;
      if (is_const(c, false)) return e;
      if (same_tree(*t, *e)) return t;
      if (c->op == Op::Not) return op_node(Op::If, {c->kids[0], e, t});
      if (is_const(t, true) && is_const(e, false)) return c;
      if (is_const(t, false) && is_const(e, true))
        return op_node(Op::Not, {c});
      if (is_const(e, false)) return op_node(Op::And, {c, t});
      if (is_const(t, true)) return op_node(Op::Or, {c, e});
      if (is_const(t, false)) return op_node(Op::And2, {e, c});
      // specialize branch occurrences of a literal condition
      if (is_literal(c)) {
        if (contains_literal(t, c->op, c->index))
          return op_node(
              Op::If, {c, substitute_literal(t, c->op, c->index, true), e});
        if (contains_literal(e, c->op, c->index))
          return op_node(
              Op::If, {c, t, substitute_literal(e, c->op, c->index, false)});
      }
      break;
    }
    default:
      break;
  }
  return n;
}

struct SemanticInfo {
  TreeEvaluator evaluator;
  explicit SemanticInfo(TerminalContext ctx) : evaluator(std::move(ctx)) {}
};

NodePtr semantic_rules(const NodePtr& n, const SemanticInfo& sem) {
  if (n->kids.empty()) return n;
  TruthTable mine = sem.evaluator.eval(*n);
  uint64_t ones = static_cast<uint64_t>(mine.weight());
  if (ones == 0) return const_node(false);
  if (ones == mine.size()) return const_node(true);
  int my_size = subtree_size(*n);
  for (const auto& kid : n->kids) {
    TruthTable k = sem.evaluator.eval(*kid);
    if (k == mine) return kid;
    if (~k == mine && subtree_size(*kid) + 1 < my_size)
      return op_node(Op::Not, {kid});
  }
  return n;
}

NodePtr simplify_pass(const NodePtr& n, const SemanticInfo* sem) {
  NodePtr node = n;
  if (!node->kids.empty()) {
    std::vector<NodePtr> kids;
    kids.reserve(node->kids.size());
    bool changed = false;
    for (const auto& kid : node->kids) {
      NodePtr r = simplify_pass(kid, sem);
      changed |= (r != kid);
      kids.push_back(std::move(r));
    }
    if (changed) node = op_node(node->op, std::move(kids));
  }
  NodePtr rewritten = local_rules(node);
  if (rewritten != node) return rewritten;
  if (sem) return semantic_rules(node, *sem);
  return node;
}

}  // namespace

GpTree simplify(const GpTree& tree) {
  int k = max_var_count(tree.root());
  int s = max_seed_count(tree.root());
  std::unique_ptr<SemanticInfo> sem;
  if (k + s <= kMaxAbstractInputs) {
    TerminalContext ctx;
    ctx.k = std::max(k, k + s == 0 ? 1 : k);
    ctx.s = s;
    sem = std::make_unique<SemanticInfo>(std::move(ctx));
  }

  NodePtr current = tree.root_ptr();
  for (;;) {
    NodePtr next = simplify_pass(current, sem.get());
    if (same_tree(*next, *current)) break;
    current = next;
  }

  GpTree out(current);
  if (sem) {
    // the rewrite must preserve the abstract table exactly
    if (!(sem->evaluator.eval(tree) == sem->evaluator.eval(out)))
      throw std::logic_error("simplification changed tree semantics");
  }
  if (out.size() > tree.size())
    throw std::logic_error("simplification grew the tree");
  return out;
}

}  // namespace bfgp
