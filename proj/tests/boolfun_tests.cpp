#include <doctest.h>

#include <sstream>

#include "bfgp/constructions.hpp"
#include "bfgp/rng.hpp"
#include "bfgp/truth_table.hpp"
#include "bfgp/walsh.hpp"
#include "support/reference.hpp"

using namespace bfgp;

TEST_CASE("truth table basics") {
  TruthTable f(3);
  CHECK(f.size() == 8);
  CHECK(f.weight() == 0);
  f.set(5, true);
  CHECK(f.get(5));
  CHECK(f.weight() == 1);

  TruthTable x0 = TruthTable::variable(3, 0);
  for (uint64_t i = 0; i < 8; ++i) CHECK(x0.get(i) == ((i & 1) != 0));
  TruthTable x2 = TruthTable::variable(3, 2);
  for (uint64_t i = 0; i < 8; ++i) CHECK(x2.get(i) == ((i >> 2 & 1) != 0));

  // variable patterns across word boundaries
  TruthTable big = TruthTable::variable(8, 7);
  for (uint64_t i = 0; i < big.size(); ++i)
    CHECK(big.get(i) == ((i >> 7 & 1) != 0));
}

TEST_CASE("word operators match pointwise definitions") {
  Rng rng(7);
  for (int n : {3, 5, 7}) {
    TruthTable a = TruthTable::random(n, rng);
    TruthTable b = TruthTable::random(n, rng);
    TruthTable c = TruthTable::random(n, rng);
    TruthTable nt = ~a, xr = a ^ b, an = a & b, orr = a | b,
               a2 = and_not(a, b), mx = mux(c, a, b);
    for (uint64_t i = 0; i < a.size(); ++i) {
      CHECK(nt.get(i) == !a.get(i));
      CHECK(xr.get(i) == (a.get(i) != b.get(i)));
      CHECK(an.get(i) == (a.get(i) && b.get(i)));
      CHECK(orr.get(i) == (a.get(i) || b.get(i)));
      CHECK(a2.get(i) == (a.get(i) && !b.get(i)));
      CHECK(mx.get(i) == (c.get(i) ? a.get(i) : b.get(i)));
    }
  }
}

TEST_CASE("lifting repeats the table") {
  Rng rng(11);
  TruthTable f = TruthTable::random(4, rng);
  TruthTable g = f.lifted(7);
  for (uint64_t i = 0; i < g.size(); ++i) CHECK(g.get(i) == f.get(i & 15));
  TruthTable h = TruthTable::random(7, rng).lifted(9);
  for (uint64_t i = 0; i < h.size(); ++i)
    CHECK(h.get(i) == h.get(i & 127));
}

TEST_CASE("hex file round trip") {
  Rng rng(3);
  for (int n : {2, 4, 6, 9}) {
    TruthTable f = TruthTable::random(n, rng);
    std::stringstream ss;
    write_truth_table(ss, f);
    CHECK(read_truth_table(ss) == f);
  }
}

TEST_CASE("hex reader rejects malformed input") {
  std::stringstream bad_len("n=3\nfff\n");
  CHECK_THROWS(read_truth_table(bad_len));
  std::stringstream bad_header("m=3\nff\n");
  CHECK_THROWS(read_truth_table(bad_header));
  std::stringstream bad_digit("n=3\nfg\n");
  CHECK_THROWS(read_truth_table(bad_digit));
  std::stringstream ok("n=3\n1e\n");
  TruthTable f = read_truth_table(ok);
  // most significant index first: indices 7..4 from '1', 3..0 from 'e'
  CHECK(f.get(4));
  CHECK(f.get(3));
  CHECK(f.get(2));
  CHECK(f.get(1));
  CHECK_FALSE(f.get(0));
  CHECK_FALSE(f.get(7));
}

TEST_CASE("walsh transform examples") {
  // constant zero correlates fully with a = 0
  WalshSpectrum w = walsh_transform(TruthTable(3));
  CHECK(w.coeffs == std::vector<int32_t>{8, 0, 0, 0, 0, 0, 0, 0});

  // f(x) = x_0 on two variables, frozen from the naive transform: the only
  // nonzero coefficient sits at a = 1 with the positive sign
  TruthTable x0 = TruthTable::variable(2, 0);
  auto naive = testing::naive_walsh(x0);
  CHECK(naive == std::vector<int32_t>{0, 4, 0, 0});
  CHECK(walsh_transform(x0).coeffs == naive);
}

TEST_CASE("fast transform equals the naive transform") {
  Rng rng(2026);
  for (int n = 1; n <= 10; ++n) {
    TruthTable f = TruthTable::random(n, rng);
    WalshSpectrum fast = walsh_transform(f);
    auto slow = testing::naive_walsh(f);
    REQUIRE(fast.coeffs.size() == slow.size());
    for (size_t a = 0; a < slow.size(); ++a) CHECK(fast.coeffs[a] == slow[a]);
  }
}

TEST_CASE("parseval and parity invariants") {
  Rng rng(5);
  for (int n = 1; n <= 10; ++n) {
    TruthTable f = TruthTable::random(n, rng);
    WalshSpectrum w = walsh_transform(f);
    int64_t sum = 0;
    for (int32_t c : w.coeffs) {
      sum += static_cast<int64_t>(c) * c;
      CHECK(std::abs(c) <= (1 << n));
      CHECK((c & 1) == ((1 << n) & 1));
    }
    CHECK(sum == (int64_t{1} << (2 * n)));
  }
}

TEST_CASE("nonlinearity examples") {
  // linear functions have distance zero to themselves
  CHECK(nonlinearity(TruthTable::variable(5, 3)) == 0);
  TruthTable parity = TruthTable::variable(4, 0) ^ TruthTable::variable(4, 1) ^
                      TruthTable::variable(4, 3);
  CHECK(nonlinearity(parity) == 0);

  // the 4-variable inner product is bent: nonlinearity 6, checked against
  // the exhaustive affine distance
  TruthTable ip = inner_product_function(4);
  CHECK(testing::exhaustive_nonlinearity(ip) == 6);
  CHECK(nonlinearity(ip) == 6);
  CHECK(is_bent(ip));
  CHECK(nonlinearity(ip) == static_cast<int>(covering_radius_bound(4)));

  // nonlinearity never exceeds the covering radius bound
  Rng rng(77);
  for (int n = 2; n <= 8; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      TruthTable f = TruthTable::random(n, rng);
      CHECK(nonlinearity(f) <= covering_radius_bound(n));
    }
}

TEST_CASE("balancedness penalty") {
  CHECK(balancedness_penalty(TruthTable(4)) == 8);
  CHECK(balancedness_penalty(TruthTable::variable(6, 0)) == 0);
  Rng rng(9);
  TruthTable f = TruthTable::random_balanced(4, rng);
  f.set(0, !f.get(0));  // tip weight to 7 or 9
  CHECK(balancedness_penalty(f) == 1);
  // balanced <=> W(0) = 0 <=> penalty 0
  for (int trial = 0; trial < 30; ++trial) {
    TruthTable g = TruthTable::random(5, rng);
    bool bal = g.balanced();
    CHECK((walsh_transform(g).coeffs[0] == 0) == bal);
    CHECK((balancedness_penalty(g) == 0) == bal);
  }
}

TEST_CASE("concatenation blocks and piecewise definition") {
  Rng rng(13);
  TruthTable f0 = TruthTable::random(3, rng);
  TruthTable f1 = TruthTable::random(3, rng);
  TruthTable F = concatenation_construct(f0, f1);
  REQUIRE(F.n() == 5);
  for (uint64_t i = 0; i < F.size(); ++i) {
    uint64_t v = i & 7;
    bool v1 = (i >> 3) & 1;
    bool v0 = (i >> 4) & 1;
    bool expect = v0 ? f0.get(v) : (f1.get(v) ^ v1);
    CHECK(F.get(i) == expect);
  }

  // degenerate all-zero seeds: v_1 on the v_0 = 0 half, 0 elsewhere
  TruthTable z(2);
  TruthTable Z = concatenation_construct(z, z);
  CHECK(Z.weight() == 4);
  CHECK(balancedness_penalty(Z) == 4);
  for (uint64_t i = 0; i < Z.size(); ++i) {
    bool v1 = (i >> 2) & 1;
    bool v0 = (i >> 3) & 1;
    CHECK(Z.get(i) == (!v0 && v1));
  }

  CHECK_THROWS(concatenation_construct(TruthTable(3), TruthTable(4)));
}

TEST_CASE("concatenation spectrum follows the case split") {
  Rng rng(17);
  for (int n : {3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      TruthTable f0 = TruthTable::random_balanced(n, rng);
      TruthTable f1 = TruthTable::random_balanced(n, rng);
      CHECK(lemma1_spectrum_check(f0, f1));
      // balanced seeds: output balanced, nonlinearity 2^(n+1) - S
      TruthTable F = concatenation_construct(f0, f1);
      CHECK(F.balanced());
      int s = std::max(walsh_transform(f0).max_abs(),
                       walsh_transform(f1).max_abs());
      CHECK(nonlinearity(F) == (1 << (n + 1)) - s);
    }
  }
  // the spectrum identity holds even for unbalanced seeds
  CHECK(lemma1_spectrum_check(TruthTable(2), TruthTable(2)));
}

TEST_CASE("concatenation reproduces the chain values") {
  // nonlinearity-12 seeds on 5 variables give 56 on 7; nonlinearity-4 seeds
  // on 4 variables give 24 on 6 (26 is out of reach for this construction)
  CHECK(concatenation_resulting_nl(5, 12) == 56);
  CHECK(concatenation_resulting_nl(4, 4) == 24);
  CHECK(concatenation_resulting_nl(7, 56) == 240);
}

TEST_CASE("rothaus construction") {
  TruthTable ip = inner_product_function(4);

  SUBCASE("equal inputs collapse to a direct sum") {
    TruthTable f = rothaus_construct(ip, ip, ip);
    REQUIRE(f.n() == 6);
    CHECK(is_bent(f));
    CHECK(nonlinearity(f) == 28);
    // h XOR y z with y on index bit 4, z on bit 5
    for (uint64_t i = 0; i < f.size(); ++i) {
      bool y = (i >> 4) & 1;
      bool z = (i >> 5) & 1;
      CHECK(f.get(i) == (ip.get(i & 15) ^ (y && z)));
    }
  }

  SUBCASE("distinct bent triple") {
    TruthTable h2 = ip ^ TruthTable::variable(4, 0);
    TruthTable h3 = ip ^ TruthTable::variable(4, 2) ^
                    TruthTable::constant(4, true);
    REQUIRE(is_bent(h2));
    REQUIRE(is_bent(h3));
    REQUIRE(is_bent(ip ^ h2 ^ h3));
    TruthTable f = rothaus_construct(ip, h2, h3);
    CHECK(is_bent(f));
    CHECK(nonlinearity(f) == 28);
  }

  SUBCASE("rejects bad inputs") {
    CHECK_THROWS_WITH_AS(
        rothaus_construct(TruthTable::variable(4, 0), ip, ip),
        doctest::Contains("h1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        rothaus_construct(ip, ip, TruthTable::variable(4, 1)),
        doctest::Contains("h3"), std::invalid_argument);
    TruthTable odd = inner_product_function(5);
    CHECK_THROWS(rothaus_construct(odd, odd, odd));
  }
}
