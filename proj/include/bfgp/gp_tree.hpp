#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace bfgp {

// Node kinds of the expression genotype. Var/Seed are the two terminal
// kinds; Const appears only in simplifier output, never in evolved trees.
enum class Op : uint8_t {
  Or,
  Xor,
  And,
  And2,  // a AND (NOT b)
  Xnor,
  Not,
  If,  // condition, then, else
  Var,
  Seed,
  Const,
};

constexpr int arity(Op op) {
  switch (op) {
    case Op::Not:
      return 1;
    case Op::If:
      return 3;
    case Op::Var:
    case Op::Seed:
    case Op::Const:
      return 0;
    default:
      return 2;
  }
}

constexpr bool is_terminal(Op op) { return arity(op) == 0; }

const char* op_name(Op op);

struct GpNode;
using NodePtr = std::shared_ptr<const GpNode>;

struct GpNode {
  Op op;
  uint8_t index = 0;  // Var/Seed terminal index; Const value
  std::vector<NodePtr> kids;
};

NodePtr var_node(int j);
NodePtr seed_node(int i);
NodePtr const_node(bool value);
NodePtr op_node(Op op, std::vector<NodePtr> kids);

int subtree_size(const GpNode& node);
int subtree_depth(const GpNode& node);  // edges on the longest path
bool same_tree(const GpNode& a, const GpNode& b);

// Immutable expression tree with cached size (node count) and depth (edge
// count of the longest root-to-leaf path; a bare leaf has depth 0).
class GpTree {
public:
  explicit GpTree(NodePtr root);

  const GpNode& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }
  int size() const { return size_; }
  int depth() const { return depth_; }

  // Preorder node access; index 0 is the root.
  NodePtr node_at(int index) const;
  int depth_of(int index) const;
  GpTree with_replacement(int index, NodePtr subtree) const;

  friend bool operator==(const GpTree& a, const GpTree& b) {
    return same_tree(*a.root_, *b.root_);
  }
  friend bool operator!=(const GpTree& a, const GpTree& b) {
    return !(a == b);
  }

private:
  NodePtr root_;
  int size_;
  int depth_;
};

// Leaf terminal usage, as bitmasks over indices.
struct TerminalUsage {
  uint32_t vars = 0;
  uint32_t seeds = 0;
};
TerminalUsage terminal_usage(const GpNode& node);

// highest referenced index + 1 (0 when the kind is absent)
int max_var_count(const GpNode& node);
int max_seed_count(const GpNode& node);

}  // namespace bfgp
