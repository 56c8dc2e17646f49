#pragma once

#include "bfgp/truth_table.hpp"

namespace bfgp {

// Inner-product quadratic x_0 x_1 XOR x_2 x_3 XOR ...; bent for even n.
TruthTable inner_product_function(int n);

// F(v_0, v_1, v) on n+2 variables: f0(v) when v_0 = 1, f1(v) XOR v_1 when
// v_0 = 0. v_0 and v_1 occupy the two most significant index positions,
// v_0 above v_1, so the table reads f1 || ~f1 || f0 || f0 in ascending
// index blocks.
TruthTable concatenation_construct(const TruthTable& f0,
                                   const TruthTable& f1);

// Verifies the closed-form spectrum of concatenation_construct against an
// exhaustive transform: with a = a0*2^(n+1) + a1*2^n + w,
//   W_F(a) = (-1)^a0 * 2 * W_f0(w)   if a1 = 0,
//   W_F(a) =           2 * W_f1(w)   if a1 = 1.
// True iff all 2^(n+2) coefficients match.
bool lemma1_spectrum_check(const TruthTable& f0, const TruthTable& f1);

// Nonlinearity the concatenation yields from balanced seeds of equal
// nonlinearity: 2^(n+1) - S with S the seeds' max |Walsh| = 2^n + 2*seed_nl.
int concatenation_resulting_nl(int seed_vars, int seed_nl);

// Bent function on n+2 variables from three bent functions h1, h2, h3 with
// h1 XOR h2 XOR h3 bent as well:
//   f(x, y, z) = h1 h2 + h1 h3 + h2 h3 + (h1 + h2) y + (h1 + h3) z + y z
// with y, z the two appended variables, y below z in index significance.
// Throws std::invalid_argument naming the offending input when a
// precondition fails.
TruthTable rothaus_construct(const TruthTable& h1, const TruthTable& h2,
                             const TruthTable& h3);

}  // namespace bfgp
