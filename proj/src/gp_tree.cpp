#include "bfgp/gp_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfgp {

const char* op_name(Op op) {
  switch (op) {
    case Op::Or:
      return "OR";
    case Op::Xor:
      return "XOR";
    case Op::And:
      return "AND";
    case Op::And2:
      return "AND2";
    case Op::Xnor:
      return "XNOR";
    case Op::Not:
      return "NOT";
    case Op::If:
      return "IF";
    case Op::Var:
      return "v";
    case Op::Seed:
      return "f";
    case Op::Const:
      return "const";
  }
  return "?";
}

NodePtr var_node(int j) {
  auto n = std::make_shared<GpNode>();
  n->op = Op::Var;
  n->index = static_cast<uint8_t>(j);
  return n;
}

NodePtr seed_node(int i) {
  auto n = std::make_shared<GpNode>();
  n->op = Op::Seed;
  n->index = static_cast<uint8_t>(i);
  return n;
}

NodePtr const_node(bool value) {
  auto n = std::make_shared<GpNode>();
  n->op = Op::Const;
  n->index = value ? 1 : 0;
  return n;
}

NodePtr op_node(Op op, std::vector<NodePtr> kids) {
  if (static_cast<int>(kids.size()) != arity(op))
    throw std::invalid_argument("node arity mismatch");
  auto n = std::make_shared<GpNode>();
  n->op = op;
  n->kids = std::move(kids);
  return n;
}

int subtree_size(const GpNode& node) {
  int total = 1;
  for (const auto& k : node.kids) total += subtree_size(*k);
  return total;
}

int subtree_depth(const GpNode& node) {
  int d = 0;
  for (const auto& k : node.kids) d = std::max(d, 1 + subtree_depth(*k));
  return d;
}

bool same_tree(const GpNode& a, const GpNode& b) {
  if (a.op != b.op || a.index != b.index || a.kids.size() != b.kids.size())
    return false;
  for (size_t i = 0; i < a.kids.size(); ++i)
    if (!same_tree(*a.kids[i], *b.kids[i])) return false;
  return true;
}

GpTree::GpTree(NodePtr root) : root_(std::move(root)) {
  if (!root_) throw std::invalid_argument("null tree root");
  size_ = subtree_size(*root_);
  depth_ = subtree_depth(*root_);
}

namespace {

const NodePtr* find_preorder(const NodePtr& node, int target, int& counter) {
  if (counter == target) return &node;
  ++counter;
  for (const auto& k : node->kids) {
    const NodePtr* r = find_preorder(k, target, counter);
    if (r) return r;
  }
  return nullptr;
}

int depth_preorder(const NodePtr& node, int target, int& counter, int depth) {
  if (counter == target) return depth;
  ++counter;
  for (const auto& k : node->kids) {
    int r = depth_preorder(k, target, counter, depth + 1);
    if (r >= 0) return r;
  }
  return -1;
}

NodePtr replace_preorder(const NodePtr& node, int target, int& counter,
                         const NodePtr& subtree) {
  if (counter == target) {
    ++counter;
    return subtree;
  }
  ++counter;
  if (node->kids.empty()) return node;
  std::vector<NodePtr> kids;
  kids.reserve(node->kids.size());
  bool changed = false;
  for (const auto& k : node->kids) {
    NodePtr r = replace_preorder(k, target, counter, subtree);
    changed |= (r != k);
    kids.push_back(std::move(r));
  }
  if (!changed) return node;
  return op_node(node->op, std::move(kids));
}

}  // namespace

NodePtr GpTree::node_at(int index) const {
  if (index < 0 || index >= size_)
    throw std::out_of_range("tree node index out of range");
  int counter = 0;
  const NodePtr* r = find_preorder(root_, index, counter);
  return *r;
}

int GpTree::depth_of(int index) const {
  if (index < 0 || index >= size_)
    throw std::out_of_range("tree node index out of range");
  int counter = 0;
  return depth_preorder(root_, index, counter, 0);
}

GpTree GpTree::with_replacement(int index, NodePtr subtree) const {
  if (index < 0 || index >= size_)
    throw std::out_of_range("tree node index out of range");
  int counter = 0;
  return GpTree(replace_preorder(root_, index, counter, subtree));
}

namespace {

void usage_walk(const GpNode& node, TerminalUsage& u) {
  if (node.op == Op::Var)
    u.vars |= uint32_t{1} << node.index;
  else if (node.op == Op::Seed)
    u.seeds |= uint32_t{1} << node.index;
  for (const auto& k : node.kids) usage_walk(*k, u);
}

}  // namespace

TerminalUsage terminal_usage(const GpNode& node) {
  TerminalUsage u;
  usage_walk(node, u);
  return u;
}

int max_var_count(const GpNode& node) {
  int best = node.op == Op::Var ? node.index + 1 : 0;
  for (const auto& k : node.kids) best = std::max(best, max_var_count(*k));
  return best;
}

int max_seed_count(const GpNode& node) {
  int best = node.op == Op::Seed ? node.index + 1 : 0;
  for (const auto& k : node.kids) best = std::max(best, max_seed_count(*k));
  return best;
}

}  // namespace bfgp
