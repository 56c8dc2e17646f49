#pragma once

#include <optional>

namespace bfgp {

// Best known nonlinearity of balanced Boolean functions by variable count
// (optimal for n <= 7).
std::optional<int> best_known_balanced_nl(int n);

// Nonlinearity the two-variable concatenation chain achieves at each output
// size when seeded optimally from below (the value general constructions are
// measured against).
std::optional<int> construction_chain_nl(int size);

}  // namespace bfgp
