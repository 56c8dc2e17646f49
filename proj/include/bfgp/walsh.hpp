#pragma once

#include <cstdint>
#include <vector>

#include "bfgp/truth_table.hpp"

namespace bfgp {

// Signed correlation spectrum of f against all linear functions a.x:
// coeffs[a] = sum_x (-1)^(f(x) XOR a.x).
struct WalshSpectrum {
  int n = 0;
  std::vector<int32_t> coeffs;

  int32_t max_abs() const;
  // number of positions whose |coefficient| equals max_abs()
  int64_t count_max_abs() const;
};

// Fast in-place butterfly, O(n 2^n) integer adds.
WalshSpectrum walsh_transform(const TruthTable& f);

// 2^(n-1) - max|W_f| / 2
int nonlinearity(const TruthTable& f);
int nonlinearity(const WalshSpectrum& w);

// |w_H(f) - 2^(n-1)|; zero iff balanced
int64_t balancedness_penalty(const TruthTable& f);

// covering radius bound 2^(n-1) - 2^(n/2-1) (not an integer for odd n)
double covering_radius_bound(int n);

// meets the covering radius bound with equality (even n only)
bool is_bent(const TruthTable& f);

}  // namespace bfgp
