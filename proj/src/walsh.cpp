#include "bfgp/walsh.hpp"

#include <cmath>
#include <cstdlib>

namespace bfgp {

int32_t WalshSpectrum::max_abs() const {
  int32_t m = 0;
  for (int32_t c : coeffs) {
    int32_t a = c < 0 ? -c : c;
    if (a > m) m = a;
  }
  return m;
}

int64_t WalshSpectrum::count_max_abs() const {
  int32_t m = max_abs();
  int64_t count = 0;
  for (int32_t c : coeffs)
    if (c == m || c == -m) ++count;
  return count;
}

WalshSpectrum walsh_transform(const TruthTable& f) {
  WalshSpectrum w;
  w.n = f.n();
  size_t size = f.size();
  w.coeffs.resize(size);
  // unpack to the +/-1 sign domain
  const auto& words = f.words();
  for (size_t i = 0; i < size; ++i)
    w.coeffs[i] = ((words[i >> 6] >> (i & 63)) & 1) ? -1 : 1;
  for (size_t len = 1; len < size; len <<= 1) {
    for (size_t i = 0; i < size; i += len << 1) {
      for (size_t j = i; j < i + len; ++j) {
        int32_t a = w.coeffs[j];
        int32_t b = w.coeffs[j + len];
        w.coeffs[j] = a + b;
        w.coeffs[j + len] = a - b;
      }
    }
  }
  return w;
}

int nonlinearity(const WalshSpectrum& w) {
  return (1 << (w.n - 1)) - w.max_abs() / 2;
}

int nonlinearity(const TruthTable& f) {
  return nonlinearity(walsh_transform(f));
}

int64_t balancedness_penalty(const TruthTable& f) {
  return std::llabs(f.weight() - static_cast<int64_t>(f.size() / 2));
}

double covering_radius_bound(int n) {
  return std::pow(2.0, n - 1) - std::pow(2.0, n / 2.0 - 1.0);
}

bool is_bent(const TruthTable& f) {
  if (f.n() % 2 != 0) return false;
  return nonlinearity(f) == (1 << (f.n() - 1)) - (1 << (f.n() / 2 - 1));
}

}  // namespace bfgp
