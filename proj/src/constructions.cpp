#include "bfgp/constructions.hpp"

#include <stdexcept>
#include <string>

#include "bfgp/walsh.hpp"

namespace bfgp {

namespace {

// result = blocks[0] || blocks[1] || ... in ascending index order, each block
// an n-variable table, block count a power of two
TruthTable concat_blocks(const std::vector<TruthTable>& blocks) {
  int n = blocks[0].n();
  int extra = 0;
  while ((size_t{1} << extra) < blocks.size()) ++extra;
  TruthTable out(n + extra);
  uint64_t block_bits = uint64_t{1} << n;
  if (n >= 6) {
    size_t words_per_block = block_bits >> 6;
    for (size_t b = 0; b < blocks.size(); ++b)
      for (size_t w = 0; w < words_per_block; ++w)
        out.words()[b * words_per_block + w] = blocks[b].words()[w];
  } else {
    for (size_t b = 0; b < blocks.size(); ++b)
      for (uint64_t i = 0; i < block_bits; ++i)
        out.set(b * block_bits + i, blocks[b].get(i));
  }
  return out;
}

}  // namespace

TruthTable inner_product_function(int n) {
  TruthTable f(n);
  for (int j = 0; j + 1 < n; j += 2)
    f = f ^ (TruthTable::variable(n, j) & TruthTable::variable(n, j + 1));
  return f;
}

TruthTable concatenation_construct(const TruthTable& f0,
                                   const TruthTable& f1) {
  if (f0.n() != f1.n())
    throw std::invalid_argument("concatenation: seed sizes differ (" +
                                std::to_string(f0.n()) + " vs " +
                                std::to_string(f1.n()) + ")");
  return concat_blocks({f1, ~f1, f0, f0});
}

bool lemma1_spectrum_check(const TruthTable& f0, const TruthTable& f1) {
  TruthTable F = concatenation_construct(f0, f1);
  WalshSpectrum wf = walsh_transform(F);
  WalshSpectrum w0 = walsh_transform(f0);
  WalshSpectrum w1 = walsh_transform(f1);
  int n = f0.n();
  uint64_t low = uint64_t{1} << n;
  for (uint64_t a = 0; a < F.size(); ++a) {
    uint64_t w = a & (low - 1);
    bool a1 = (a >> n) & 1;
    bool a0 = (a >> (n + 1)) & 1;
    int32_t expect = a1 ? 2 * w1.coeffs[w]
                        : (a0 ? -2 * w0.coeffs[w] : 2 * w0.coeffs[w]);
    if (wf.coeffs[a] != expect) return false;
  }
  return true;
}

int concatenation_resulting_nl(int seed_vars, int seed_nl) {
  return (1 << seed_vars) + 2 * seed_nl;
}

TruthTable rothaus_construct(const TruthTable& h1, const TruthTable& h2,
                             const TruthTable& h3) {
  int n = h1.n();
  if (h2.n() != n || h3.n() != n)
    throw std::invalid_argument("rothaus: input sizes differ");
  if (n % 2 != 0)
    throw std::invalid_argument("rothaus: odd variable count " +
                                std::to_string(n));
  const TruthTable* inputs[3] = {&h1, &h2, &h3};
  for (int i = 0; i < 3; ++i)
    if (!is_bent(*inputs[i]))
      throw std::invalid_argument("rothaus: h" + std::to_string(i + 1) +
                                  " is not bent");
  if (!is_bent(h1 ^ h2 ^ h3))
    throw std::invalid_argument("rothaus: h1 XOR h2 XOR h3 is not bent");

  TruthTable base = (h1 & h2) ^ (h1 & h3) ^ (h2 & h3);
  TruthTable a = h1 ^ h2;  // coefficient of the first appended variable
  TruthTable b = h1 ^ h3;  // coefficient of the second
  // quadrants by (second, first) appended bits: 00, 01, 10, 11
  return concat_blocks({base, base ^ a, base ^ b, ~(base ^ a ^ b)});
}

}  // namespace bfgp
