#include "bfgp/gp_variation.hpp"

#include "bfgp/gp_generate.hpp"

namespace bfgp {

const char* crossover_name(CrossoverKind kind) {
  switch (kind) {
    case CrossoverKind::SimpleTree:
      return "simple-tree";
    case CrossoverKind::Uniform:
      return "uniform";
    case CrossoverKind::SizeFair:
      return "size-fair";
    case CrossoverKind::OnePoint:
      return "one-point";
    case CrossoverKind::ContextPreserving:
      return "context-preserving";
  }
  return "?";
}

namespace {

// standard 90/10 bias toward internal nodes when any exist
int pick_point(const GpTree& t, Rng& rng) {
  if (t.size() == 1) return 0;
  bool internal = rng.below(10) != 0;
  std::vector<int> pool;
  pool.reserve(t.size());
  for (int i = 0; i < t.size(); ++i) {
    bool leaf = t.node_at(i)->kids.empty();
    if (leaf != internal) pool.push_back(i);
  }
  if (pool.empty()) return static_cast<int>(rng.below(t.size()));
  return pool[rng.below(pool.size())];
}

GpTree simple_tree_cx(const GpTree& a, const GpTree& b, Rng& rng) {
  int pa = pick_point(a, rng);
  int pb = pick_point(b, rng);
  return a.with_replacement(pa, b.node_at(pb));
}

NodePtr uniform_mix(const NodePtr& x, const NodePtr& y, Rng& rng) {
  // outside the common region (arity mismatch or leaves) the chosen parent
  // donates its whole subtree
  if (x->kids.size() != y->kids.size() || x->kids.empty())
    return rng.coin() ? x : y;
  const NodePtr& label = rng.coin() ? x : y;
  std::vector<NodePtr> kids;
  kids.reserve(x->kids.size());
  for (size_t i = 0; i < x->kids.size(); ++i)
    kids.push_back(uniform_mix(x->kids[i], y->kids[i], rng));
  return op_node(label->op, std::move(kids));
}

GpTree uniform_cx(const GpTree& a, const GpTree& b, Rng& rng) {
  return GpTree(uniform_mix(a.root_ptr(), b.root_ptr(), rng));
}

GpTree size_fair_cx(const GpTree& a, const GpTree& b, Rng& rng) {
  int pa = pick_point(a, rng);
  int removed = subtree_size(*a.node_at(pa));
  std::vector<int> candidates;
  for (int i = 0; i < b.size(); ++i)
    if (subtree_size(*b.node_at(i)) <= 2 * removed + 1) candidates.push_back(i);
  int pb = candidates[rng.below(candidates.size())];
  return a.with_replacement(pa, b.node_at(pb));
}

using IndexPair = std::pair<int, int>;  // preorder indices in (a, b)

// region where both trees overlap with matching arity all the way down
void common_region(const GpNode& x, const GpNode& y, int& ia, int& ib,
                   std::vector<IndexPair>& out) {
  out.emplace_back(ia, ib);
  ++ia;
  ++ib;
  if (x.kids.size() != y.kids.size()) {
    ia += subtree_size(x) - 1;
    ib += subtree_size(y) - 1;
    return;
  }
  for (size_t i = 0; i < x.kids.size(); ++i)
    common_region(*x.kids[i], *y.kids[i], ia, ib, out);
}

// coordinates (child-index paths) that exist in both trees
void common_coords(const GpNode& x, const GpNode& y, int& ia, int& ib,
                   std::vector<IndexPair>& out) {
  out.emplace_back(ia, ib);
  ++ia;
  ++ib;
  size_t shared = std::min(x.kids.size(), y.kids.size());
  for (size_t i = 0; i < x.kids.size() || i < y.kids.size(); ++i) {
    if (i < shared)
      common_coords(*x.kids[i], *y.kids[i], ia, ib, out);
    else if (i < x.kids.size())
      ia += subtree_size(*x.kids[i]);
    else
      ib += subtree_size(*y.kids[i]);
  }
}

GpTree one_point_cx(const GpTree& a, const GpTree& b, Rng& rng) {
  std::vector<IndexPair> region;
  int ia = 0, ib = 0;
  common_region(a.root(), b.root(), ia, ib, region);
  auto [pa, pb] = region[rng.below(region.size())];
  return a.with_replacement(pa, b.node_at(pb));
}

GpTree context_preserving_cx(const GpTree& a, const GpTree& b, Rng& rng) {
  std::vector<IndexPair> coords;
  int ia = 0, ib = 0;
  common_coords(a.root(), b.root(), ia, ib, coords);
  auto [pa, pb] = coords[rng.below(coords.size())];
  return a.with_replacement(pa, b.node_at(pb));
}

}  // namespace

GpTree crossover(const GpTree& a, const GpTree& b, CrossoverKind kind,
                 int max_depth, Rng& rng, int retry_limit) {
  for (int attempt = 0; attempt <= retry_limit; ++attempt) {
    GpTree child = [&] {
      switch (kind) {
        case CrossoverKind::SimpleTree:
          return simple_tree_cx(a, b, rng);
        case CrossoverKind::Uniform:
          return uniform_cx(a, b, rng);
        case CrossoverKind::SizeFair:
          return size_fair_cx(a, b, rng);
        case CrossoverKind::OnePoint:
          return one_point_cx(a, b, rng);
        case CrossoverKind::ContextPreserving:
          return context_preserving_cx(a, b, rng);
      }
      return a;
    }();
    if (child.depth() <= max_depth) return child;
  }
  return a;
}

GpTree subtree_mutation(const GpTree& t, const TerminalContext& ctx,
                        int max_depth, Rng& rng) {
  int point = static_cast<int>(rng.below(t.size()));
  int budget = max_depth - t.depth_of(point);
  return t.with_replacement(point,
                            random_subtree(ctx, budget, /*full=*/false, rng));
}

}  // namespace bfgp
