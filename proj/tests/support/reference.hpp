#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive so they share no code path with the library.

#include <bit>
#include <cstdint>
#include <vector>

#include "bfgp/gp_tree.hpp"
#include "bfgp/truth_table.hpp"

namespace bfgp::testing {

// direct double-loop transform: coeffs[a] = sum_x (-1)^(f(x) + a.x)
inline std::vector<int32_t> naive_walsh(const TruthTable& f) {
  uint64_t size = f.size();
  std::vector<int32_t> coeffs(size);
  for (uint64_t a = 0; a < size; ++a) {
    int32_t sum = 0;
    for (uint64_t x = 0; x < size; ++x) {
      int exponent = (f.get(x) ? 1 : 0) + std::popcount(a & x);
      sum += (exponent % 2 == 0) ? 1 : -1;
    }
    coeffs[a] = sum;
  }
  return coeffs;
}

// minimum Hamming distance to every affine function a.x + b
inline int exhaustive_nonlinearity(const TruthTable& f) {
  uint64_t size = f.size();
  int best = static_cast<int>(size);
  for (uint64_t a = 0; a < size; ++a) {
    for (int b = 0; b < 2; ++b) {
      int dist = 0;
      for (uint64_t x = 0; x < size; ++x) {
        bool affine = (std::popcount(a & x) % 2 == 1) ^ (b == 1);
        if (affine != f.get(x)) ++dist;
      }
      if (dist < best) best = dist;
    }
  }
  return best;
}

// per-assignment tree interpreter, abstract terminals: v_j reads index bit
// j, f_i reads index bit k+i
inline bool eval_point_abstract(const GpNode& node, uint64_t assignment,
                                int k) {
  switch (node.op) {
    case Op::Var:
      return (assignment >> node.index) & 1;
    case Op::Seed:
      return (assignment >> (k + node.index)) & 1;
    case Op::Const:
      return node.index != 0;
    case Op::Not:
      return !eval_point_abstract(*node.kids[0], assignment, k);
    case Op::Or:
      return eval_point_abstract(*node.kids[0], assignment, k) ||
             eval_point_abstract(*node.kids[1], assignment, k);
    case Op::And:
      return eval_point_abstract(*node.kids[0], assignment, k) &&
             eval_point_abstract(*node.kids[1], assignment, k);
    case Op::And2:
      return eval_point_abstract(*node.kids[0], assignment, k) &&
             !eval_point_abstract(*node.kids[1], assignment, k);
    case Op::Xor:
      return eval_point_abstract(*node.kids[0], assignment, k) !=
             eval_point_abstract(*node.kids[1], assignment, k);
    case Op::Xnor:
      return eval_point_abstract(*node.kids[0], assignment, k) ==
             eval_point_abstract(*node.kids[1], assignment, k);
    case Op::If:
      return eval_point_abstract(*node.kids[0], assignment, k)
                 ? eval_point_abstract(*node.kids[1], assignment, k)
                 : eval_point_abstract(*node.kids[2], assignment, k);
  }
  return false;
}

// per-assignment interpreter with concrete seed tables; idx indexes the
// (n+k)-variable result
inline bool eval_point_concrete(const GpNode& node, uint64_t idx,
                                const std::vector<TruthTable>& seeds, int n) {
  switch (node.op) {
    case Op::Var:
      return (idx >> (n + node.index)) & 1;
    case Op::Seed:
      return seeds[node.index].get(idx & ((uint64_t{1} << n) - 1));
    case Op::Const:
      return node.index != 0;
    case Op::Not:
      return !eval_point_concrete(*node.kids[0], idx, seeds, n);
    case Op::Or:
      return eval_point_concrete(*node.kids[0], idx, seeds, n) ||
             eval_point_concrete(*node.kids[1], idx, seeds, n);
    case Op::And:
      return eval_point_concrete(*node.kids[0], idx, seeds, n) &&
             eval_point_concrete(*node.kids[1], idx, seeds, n);
    case Op::And2:
      return eval_point_concrete(*node.kids[0], idx, seeds, n) &&
             !eval_point_concrete(*node.kids[1], idx, seeds, n);
    case Op::Xor:
      return eval_point_concrete(*node.kids[0], idx, seeds, n) !=
             eval_point_concrete(*node.kids[1], idx, seeds, n);
    case Op::Xnor:
      return eval_point_concrete(*node.kids[0], idx, seeds, n) ==
             eval_point_concrete(*node.kids[1], idx, seeds, n);
    case Op::If:
      return eval_point_concrete(*node.kids[0], idx, seeds, n)
                 ? eval_point_concrete(*node.kids[1], idx, seeds, n)
                 : eval_point_concrete(*node.kids[2], idx, seeds, n);
  }
  return false;
}

}  // namespace bfgp::testing
