#pragma once

#include <cstdint>
#include <vector>

#include "bfgp/gp_tree.hpp"
#include "bfgp/truth_table.hpp"

namespace bfgp {

// A construction's semantics with every terminal treated as a free Boolean
// input: a table on s+k inputs ordered v_0..v_{k-1}, f_0..f_{s-1} (input p
// sits on index bit p).
struct AbstractFunction {
  int k = 0;
  int s = 0;
  TruthTable table;

  int inputs() const { return k + s; }
};

constexpr int kMaxAbstractInputs = 16;

AbstractFunction abstractize(const GpTree& tree, int s, int k);

// Terminals whose two cofactors differ somewhere.
struct EssentialSet {
  uint32_t var_mask = 0;
  uint32_t seed_mask = 0;

  bool var(int j) const { return (var_mask >> j) & 1; }
  bool seed(int i) const { return (seed_mask >> i) & 1; }
  int vars_used() const;
  int seeds_used() const;
};

EssentialSet essential_terminals(const AbstractFunction& a);

// Projects the table onto the essential inputs (inessential ones fixed to
// 0), keeping the relative input order.
AbstractFunction restrict_to_essential(const AbstractFunction& a);

// Allowed transformations when deciding construction equivalence.
struct EquivRelation {
  enum class Scope {
    WithinKind,  // v's permute with v's, f's with f's
    Joint,       // all s+k inputs permute jointly
  };
  Scope scope = Scope::WithinKind;
  bool output_negation = true;
  bool input_negation = false;  // full NPN when combined with Joint
};

// True iff some allowed transformation maps a's table onto b's; brute force
// over the transformation group.
bool equivalent(const AbstractFunction& a, const AbstractFunction& b,
                const EquivRelation& relation);

// Least transformed table under the relation; equal canonical forms decide
// the same relation as pairwise equivalent().
TruthTable canonical_form(const AbstractFunction& a,
                          const EquivRelation& relation);

struct EquivalenceGraph {
  int nodes = 0;
  std::vector<std::vector<uint8_t>> adjacency;  // reflexive, symmetric
  std::vector<std::vector<int>> classes;        // partition of 0..nodes-1

  int num_classes() const { return static_cast<int>(classes.size()); }
  int max_class_size() const;
};

EquivalenceGraph equivalence_graph(const std::vector<GpTree>& trees, int s,
                                   int k, const EquivRelation& relation);

struct SizeStats {
  int min = 0;
  int max = 0;
  double median = 0;
  double q1 = 0;
  double q3 = 0;
  std::vector<int> values;  // raw node counts, input order
};

SizeStats size_stats(const std::vector<GpTree>& trees);

// Semantically identical tree (equal abstract table) with constants folded,
// IF branches specialized by their condition literal, double negations
// removed, identity operands elided and dead subtrees pruned. Never larger
// than the input.
GpTree simplify(const GpTree& tree);

}  // namespace bfgp
