#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bfgp/rng.hpp"

namespace bfgp {

// Bit-packed truth table of a Boolean function of n variables, 64 values per
// word. Index convention (fixed for the whole library): the input vector
// (x_{n-1},...,x_0) maps to index sum x_j * 2^j, i.e. variable j carries bit
// weight 2^j and the variable with the largest subscript is most significant.
class TruthTable {
public:
  static constexpr int kMaxVars = 24;

  TruthTable() = default;  // empty sentinel, n() == 0
  explicit TruthTable(int n);

  static TruthTable constant(int n, bool value);
  // f(x) = x_j
  static TruthTable variable(int n, int j);
  static TruthTable from_bits(int n, const std::vector<int>& bits);
  static TruthTable random(int n, Rng& rng);
  static TruthTable random_balanced(int n, Rng& rng);

  int n() const { return n_; }
  uint64_t size() const { return uint64_t{1} << n_; }

  bool get(uint64_t idx) const {
    return (words_[idx >> 6] >> (idx & 63)) & 1;
  }
  void set(uint64_t idx, bool v) {
    uint64_t mask = uint64_t{1} << (idx & 63);
    if (v)
      words_[idx >> 6] |= mask;
    else
      words_[idx >> 6] &= ~mask;
  }

  int64_t weight() const;
  bool balanced() const { return weight() == static_cast<int64_t>(size() / 2); }

  // Same function viewed on total_n >= n variables; the added high variables
  // are ignored (the table is tiled 2^(total_n - n) times).
  TruthTable lifted(int total_n) const;

  const std::vector<uint64_t>& words() const { return words_; }
  std::vector<uint64_t>& words() { return words_; }

  std::string to_hex() const;  // most significant index first, n >= 2
  static TruthTable from_hex(int n, const std::string& hex);

  friend bool operator==(const TruthTable& a, const TruthTable& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const TruthTable& a, const TruthTable& b) {
    return !(a == b);
  }
  friend bool operator<(const TruthTable& a, const TruthTable& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.words_ < b.words_;
  }

  void mask_slack();  // clears bits above 2^n in the last word

private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

// Word-parallel operators. Mismatched sizes throw std::invalid_argument.
TruthTable operator~(const TruthTable& a);
TruthTable operator^(const TruthTable& a, const TruthTable& b);
TruthTable operator&(const TruthTable& a, const TruthTable& b);
TruthTable operator|(const TruthTable& a, const TruthTable& b);
// a AND (NOT b)
TruthTable and_not(const TruthTable& a, const TruthTable& b);
// c ? t : e, bitwise
TruthTable mux(const TruthTable& c, const TruthTable& t, const TruthTable& e);

// File format: header line "n=<k>", then one line of 2^n/4 hex digits with
// the most significant index first. Only n >= 2 is representable.
void write_truth_table(std::ostream& os, const TruthTable& f);
TruthTable read_truth_table(std::istream& is);
void save_truth_table(const std::string& path, const TruthTable& f);
TruthTable load_truth_table(const std::string& path);

}  // namespace bfgp
