#include "bfgp/truth_table.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bfgp {

namespace {

// patterns of x_j over the 64 indices of one word, j < 6
constexpr uint64_t kVarMask[6] = {
    0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
    0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL,
};

size_t word_count(int n) {
  return n >= 6 ? (size_t{1} << (n - 6)) : 1;
}

void check_n(int n) {
  if (n < 1 || n > TruthTable::kMaxVars)
    throw std::invalid_argument("variable count out of range: " +
                                std::to_string(n));
}

void check_same(const TruthTable& a, const TruthTable& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("truth table size mismatch: n=" +
                                std::to_string(a.n()) + " vs n=" +
                                std::to_string(b.n()));
}

}  // namespace

TruthTable::TruthTable(int n) : n_(n) {
  check_n(n);
  words_.assign(word_count(n), 0);
}

void TruthTable::mask_slack() {
  if (n_ < 6) words_[0] &= (uint64_t{1} << size()) - 1;
}

TruthTable TruthTable::constant(int n, bool value) {
  TruthTable f(n);
  if (value) {
    for (auto& w : f.words_) w = ~uint64_t{0};
    f.mask_slack();
  }
  return f;
}

TruthTable TruthTable::variable(int n, int j) {
  check_n(n);
  if (j < 0 || j >= n)
    throw std::invalid_argument("variable index out of range: " +
                                std::to_string(j));
  TruthTable f(n);
  if (j < 6) {
    for (auto& w : f.words_) w = kVarMask[j];
    f.mask_slack();
  } else {
    for (size_t w = 0; w < f.words_.size(); ++w)
      if ((w >> (j - 6)) & 1) f.words_[w] = ~uint64_t{0};
  }
  return f;
}

TruthTable TruthTable::from_bits(int n, const std::vector<int>& bits) {
  check_n(n);
  TruthTable f(n);
  if (bits.size() != f.size())
    throw std::invalid_argument("bit vector length mismatch");
  for (uint64_t i = 0; i < f.size(); ++i)
    if (bits[i]) f.set(i, true);
  return f;
}

TruthTable TruthTable::random(int n, Rng& rng) {
  TruthTable f(n);
  for (auto& w : f.words_) w = rng.next_u64();
  f.mask_slack();
  return f;
}

TruthTable TruthTable::random_balanced(int n, Rng& rng) {
  check_n(n);
  uint64_t sz = uint64_t{1} << n;
  std::vector<uint8_t> bits(sz, 0);
  for (uint64_t i = 0; i < sz / 2; ++i) bits[i] = 1;
  for (uint64_t i = sz - 1; i > 0; --i)
    std::swap(bits[i], bits[rng.below(i + 1)]);
  TruthTable f(n);
  for (uint64_t i = 0; i < sz; ++i)
    if (bits[i]) f.set(i, true);
  return f;
}

int64_t TruthTable::weight() const {
  int64_t w = 0;
  for (uint64_t word : words_) w += std::popcount(word);
  return w;
}

TruthTable TruthTable::lifted(int total_n) const {
  if (total_n < n_)
    throw std::invalid_argument("cannot lift to fewer variables");
  if (total_n == n_) return *this;
  TruthTable out(total_n);
  if (n_ >= 6) {
    size_t base = words_.size();
    for (size_t w = 0; w < out.words_.size(); ++w)
      out.words_[w] = words_[w % base];
  } else {
    uint64_t pattern = words_[0];
    int span = 1 << n_;
    uint64_t word = 0;
    for (int off = 0; off < 64; off += span) word |= pattern << off;
    for (auto& w : out.words_) w = word;
    out.mask_slack();
  }
  return out;
}

TruthTable operator~(const TruthTable& a) {
  TruthTable r = a;
  for (auto& w : r.words()) w = ~w;
  r.mask_slack();
  return r;
}

TruthTable operator^(const TruthTable& a, const TruthTable& b) {
  check_same(a, b);
  TruthTable r = a;
  for (size_t i = 0; i < r.words().size(); ++i) r.words()[i] ^= b.words()[i];
  return r;
}

TruthTable operator&(const TruthTable& a, const TruthTable& b) {
  check_same(a, b);
  TruthTable r = a;
  for (size_t i = 0; i < r.words().size(); ++i) r.words()[i] &= b.words()[i];
  return r;
}

TruthTable operator|(const TruthTable& a, const TruthTable& b) {
  check_same(a, b);
  TruthTable r = a;
  for (size_t i = 0; i < r.words().size(); ++i) r.words()[i] |= b.words()[i];
  return r;
}

TruthTable and_not(const TruthTable& a, const TruthTable& b) {
  check_same(a, b);
  TruthTable r = a;
  for (size_t i = 0; i < r.words().size(); ++i) r.words()[i] &= ~b.words()[i];
  r.mask_slack();
  return r;
}

TruthTable mux(const TruthTable& c, const TruthTable& t, const TruthTable& e) {
  check_same(c, t);
  check_same(c, e);
  TruthTable r = c;
  for (size_t i = 0; i < r.words().size(); ++i) {
    uint64_t cw = c.words()[i];
    r.words()[i] = (cw & t.words()[i]) | (~cw & e.words()[i]);
  }
  r.mask_slack();
  return r;
}

std::string TruthTable::to_hex() const {
  if (n_ < 2)
    throw std::invalid_argument("hex form needs at least 2 variables");
  size_t digits = size() / 4;
  std::string out(digits, '0');
  static const char* hexchars = "0123456789abcdef";
  for (size_t d = 0; d < digits; ++d) {
    // digit d counts from the most significant end
    size_t nib = digits - 1 - d;
    unsigned v = (words_[nib >> 4] >> ((nib & 15) * 4)) & 0xF;
    out[d] = hexchars[v];
  }
  return out;
}

TruthTable TruthTable::from_hex(int n, const std::string& hex) {
  check_n(n);
  if (n < 2) throw std::invalid_argument("hex form needs at least 2 variables");
  TruthTable f(n);
  size_t digits = f.size() / 4;
  if (hex.size() != digits)
    throw std::invalid_argument("hex length mismatch: expected " +
                                std::to_string(digits) + " digits, got " +
                                std::to_string(hex.size()));
  for (size_t d = 0; d < digits; ++d) {
    char c = hex[d];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = 10 + c - 'a';
    else if (c >= 'A' && c <= 'F')
      v = 10 + c - 'A';
    else
      throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
    size_t nib = digits - 1 - d;
    f.words_[nib >> 4] |= uint64_t{v} << ((nib & 15) * 4);
  }
  return f;
}

void write_truth_table(std::ostream& os, const TruthTable& f) {
  os << "n=" << f.n() << "\n" << f.to_hex() << "\n";
}

TruthTable read_truth_table(std::istream& is) {
  std::string header;
  if (!std::getline(is, header))
    throw std::runtime_error("truth table: missing header line");
  if (header.rfind("n=", 0) != 0)
    throw std::runtime_error("truth table: header must be n=<k>, got \"" +
                             header + "\"");
  int n;
  try {
    n = std::stoi(header.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("truth table: bad variable count in header");
  }
  std::string hex;
  if (!std::getline(is, hex))
    throw std::runtime_error("truth table: missing value line");
  while (!hex.empty() && (hex.back() == '\r' || hex.back() == ' '))
    hex.pop_back();
  return TruthTable::from_hex(n, hex);
}

void save_truth_table(const std::string& path, const TruthTable& f) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_truth_table(os, f);
}

TruthTable load_truth_table(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  try {
    return read_truth_table(is);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace bfgp
