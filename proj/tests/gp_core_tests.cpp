#include <doctest.h>

#include <set>

#include "bfgp/constructions.hpp"
#include "bfgp/gp_generate.hpp"
#include "bfgp/gp_text.hpp"
#include "bfgp/gp_tree.hpp"
#include "bfgp/gp_variation.hpp"
#include "bfgp/rng.hpp"
#include "bfgp/walsh.hpp"
#include "support/reference.hpp"

using namespace bfgp;

namespace {

TerminalContext abstract_ctx(int k, int s) {
  TerminalContext ctx;
  ctx.k = k;
  ctx.s = s;
  return ctx;
}

TerminalContext concrete_ctx(int k, std::vector<TruthTable> seeds) {
  TerminalContext ctx;
  ctx.k = k;
  ctx.s = static_cast<int>(seeds.size());
  ctx.seeds = std::move(seeds);
  return ctx;
}

GpTree concat_tree() {
  // IF(v0, f0, (v1 XOR f1))
  return GpTree(op_node(
      Op::If, {var_node(0), seed_node(0),
               op_node(Op::Xor, {var_node(1), seed_node(1)})}));
}

}  // namespace

TEST_CASE("tree caches and navigation") {
  GpTree t = concat_tree();
  CHECK(t.size() == 6);
  CHECK(t.depth() == 2);
  CHECK(t.node_at(0)->op == Op::If);
  CHECK(t.node_at(1)->op == Op::Var);
  CHECK(t.node_at(3)->op == Op::Xor);
  CHECK(t.depth_of(0) == 0);
  CHECK(t.depth_of(3) == 1);
  CHECK(t.depth_of(5) == 2);
  GpTree r = t.with_replacement(3, seed_node(1));
  CHECK(r.size() == 4);
  CHECK(serialize_tree(r) == "IF(v0, f0, f1)");
  // the original is untouched
  CHECK(t.size() == 6);
}

TEST_CASE("seed leaf lifts the seed table") {
  Rng rng(21);
  TruthTable seed0 = TruthTable::random(4, rng);
  TruthTable seed1 = TruthTable::random_balanced(4, rng);
  GpTree t(seed_node(0));
  TruthTable F = eval_tree(t, concrete_ctx(2, {seed0, seed1}));
  REQUIRE(F.n() == 6);
  // value ignores the additional bits: plain block replication
  for (uint64_t i = 0; i < F.size(); ++i) CHECK(F.get(i) == seed0.get(i & 15));
  CHECK(balancedness_penalty(F) == 4 * balancedness_penalty(seed0));
  CHECK(nonlinearity(F) == 4 * nonlinearity(seed0));
}

TEST_CASE("the mux tree equals the concatenation construction") {
  Rng rng(22);
  TruthTable f0 = TruthTable::random(4, rng);
  TruthTable f1 = TruthTable::random(4, rng);
  TruthTable from_tree = eval_tree(concat_tree(), concrete_ctx(2, {f0, f1}));
  CHECK(from_tree == concatenation_construct(f0, f1));
}

TEST_CASE("self-xor gives the zero table") {
  GpTree t(op_node(Op::Xor, {var_node(0), var_node(0)}));
  CHECK(eval_tree(t, abstract_ctx(2, 2)) == TruthTable(4));
}

TEST_CASE("evaluation rejects bad leaves and shapes") {
  GpTree oob(seed_node(3));
  CHECK_THROWS(eval_tree(oob, abstract_ctx(2, 2)));
  Rng rng(5);
  TerminalContext mixed;
  mixed.k = 2;
  mixed.s = 2;
  mixed.seeds = {TruthTable::random(3, rng), TruthTable::random(4, rng)};
  CHECK_THROWS(eval_tree(GpTree(seed_node(0)), mixed));
}

TEST_CASE("word-parallel evaluation matches the pointwise interpreter") {
  Rng rng(23);
  TerminalContext actx = abstract_ctx(2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    GpTree t = random_tree(actx, 4, rng);
    TruthTable table = eval_tree(t, actx);
    for (uint64_t x = 0; x < table.size(); ++x)
      CHECK(table.get(x) == testing::eval_point_abstract(t.root(), x, actx.k));
  }
  // concrete mode against the seed-table interpreter
  std::vector<TruthTable> seeds = {TruthTable::random(4, rng),
                                   TruthTable::random(4, rng)};
  TerminalContext cctx = concrete_ctx(2, seeds);
  for (int trial = 0; trial < 100; ++trial) {
    GpTree t = random_tree(cctx, 4, rng);
    TruthTable table = eval_tree(t, cctx);
    for (uint64_t x = 0; x < table.size(); ++x)
      CHECK(table.get(x) ==
            testing::eval_point_concrete(t.root(), x, seeds, 4));
  }
}

TEST_CASE("abstract evaluation commutes with seed substitution") {
  Rng rng(24);
  TerminalContext actx = abstract_ctx(2, 2);
  std::vector<TruthTable> seeds = {TruthTable::random(4, rng),
                                   TruthTable::random(4, rng)};
  TerminalContext cctx = concrete_ctx(2, seeds);
  for (int trial = 0; trial < 100; ++trial) {
    GpTree t = random_tree(actx, 5, rng);
    TruthTable abs = eval_tree(t, actx);
    TruthTable conc = eval_tree(t, cctx);
    for (uint64_t idx = 0; idx < conc.size(); ++idx) {
      uint64_t v = idx & 15;
      uint64_t point = (idx >> 4) & 3;  // v_0, v_1 assignment
      if (seeds[0].get(v)) point |= 4;
      if (seeds[1].get(v)) point |= 8;
      CHECK(conc.get(idx) == abs.get(point));
    }
  }
}

TEST_CASE("random trees respect the depth bound and use both leaf kinds") {
  Rng rng(25);
  TerminalContext ctx = abstract_ctx(2, 2);
  bool saw_var = false, saw_seed = false;
  for (int i = 0; i < 10000; ++i) {
    GpTree t = random_tree(ctx, 5, rng);
    CHECK(t.depth() <= 5);
    TerminalUsage u = terminal_usage(t.root());
    saw_var |= u.vars != 0;
    saw_seed |= u.seeds != 0;
  }
  CHECK(saw_var);
  CHECK(saw_seed);
}

TEST_CASE("depth-1 generation yields leaves or one-level trees") {
  Rng rng(26);
  TerminalContext ctx = abstract_ctx(1, 2);
  bool saw_bare_leaf = false;
  for (int i = 0; i < 2000; ++i) {
    GpTree t = random_tree(ctx, 1, rng);
    CHECK(t.depth() <= 1);
    saw_bare_leaf |= t.size() == 1;
    if (t.depth() == 1)
      for (const auto& kid : t.root().kids) CHECK(kid->kids.empty());
  }
  CHECK(saw_bare_leaf);
}

TEST_CASE("crossover closure over all five kinds") {
  Rng rng(27);
  TerminalContext ctx = abstract_ctx(2, 4);
  std::vector<GpTree> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(random_tree(ctx, 5, rng));
  for (int i = 0; i < 10000; ++i) {
    const GpTree& a = pool[rng.below(pool.size())];
    const GpTree& b = pool[rng.below(pool.size())];
    CrossoverKind kind = all_crossover_kinds()[rng.below(5)];
    GpTree child = crossover(a, b, kind, 5, rng);
    CHECK(child.depth() <= 5);
    TerminalUsage u = terminal_usage(child.root());
    CHECK((u.vars >> ctx.k) == 0);
    CHECK((u.seeds >> ctx.s) == 0);
  }
}

TEST_CASE("one-point crossover of two leaves returns one of them") {
  Rng rng(28);
  GpTree a(var_node(0));
  GpTree b(seed_node(1));
  for (int i = 0; i < 50; ++i) {
    GpTree child = crossover(a, b, CrossoverKind::OnePoint, 5, rng);
    REQUIRE(child.size() == 1);
    bool is_a = child == a;
    bool is_b = child == b;
    CHECK((is_a || is_b));
  }
}

TEST_CASE("self-crossover keeps the depth bound") {
  Rng rng(29);
  TerminalContext ctx = abstract_ctx(2, 2);
  for (int i = 0; i < 2000; ++i) {
    GpTree a = random_tree(ctx, 5, rng);
    GpTree child = crossover(a, a, CrossoverKind::SimpleTree, 5, rng);
    CHECK(child.depth() <= 5);
  }
}

TEST_CASE("mutation respects the depth bound") {
  Rng rng(30);
  TerminalContext ctx = abstract_ctx(2, 2);
  for (int i = 0; i < 10000; ++i) {
    GpTree t = random_tree(ctx, 5, rng);
    GpTree m = subtree_mutation(t, ctx, 5, rng);
    CHECK(m.depth() <= 5);
  }
}

TEST_CASE("identical rng seeds replay identical trees") {
  TerminalContext ctx = abstract_ctx(2, 2);
  Rng r1(4242), r2(4242);
  for (int i = 0; i < 200; ++i) {
    GpTree a = random_tree(ctx, 5, r1);
    GpTree b = random_tree(ctx, 5, r2);
    CHECK(a == b);
  }
}

TEST_CASE("the published construction strings round-trip") {
  const char* rows[] = {
      "IF(v0, f0, (v1 XOR f1))",
      "IF(v0, f0, (f1 XOR v1))",
      "IF(v0, f1, ((v1 XOR f0) OR (v1 AND v0)))",
      "IF(v1, f1, (f0 XOR v0))",
      "IF(NOT(NOT(v0)), NOT((f0 XOR NOT(v1))), f1)",
      "IF(v1, (v0 XOR (f1 AND v1)), IF(v1, (f2 OR (f2 AND (f2 OR f3))), f0))",
      "IF(v0, (f1 XOR v1), ((((f0 OR f3) AND2 IF(f3, f2, v1)) AND v0) OR f3))",
      "IF(v0, (v0 AND2 f1), ((v0 AND ((f2 XOR v1) XOR f3)) XOR (NOT(f0) XOR "
      "IF((v0 XNOR v1), v1, v0))))",
  };
  TerminalContext ctx = abstract_ctx(2, 4);
  for (const char* row : rows) {
    GpTree t = parse_tree(row, ctx);
    CHECK(serialize_tree(t) == row);
    CHECK(parse_tree(serialize_tree(t), ctx) == t);
  }
  // the smallest row really is the mux tree
  CHECK(parse_tree(rows[0], ctx) ==
        GpTree(op_node(Op::If, {var_node(0), seed_node(0),
                                op_node(Op::Xor,
                                        {var_node(1), seed_node(1)})})));
}

TEST_CASE("parser accepts a bare top-level binary operator") {
  TerminalContext ctx = abstract_ctx(2, 2);
  GpTree t = parse_tree("v0 XOR f0", ctx);
  CHECK(serialize_tree(t) == "(v0 XOR f0)");
}

TEST_CASE("parser reports positions and bad terminals") {
  TerminalContext ctx = abstract_ctx(2, 4);
  CHECK_THROWS_AS(parse_tree("f9", ctx), ParseError);
  CHECK_THROWS_AS(parse_tree("v2", ctx), ParseError);
  CHECK_THROWS_AS(parse_tree("IF(v0, f0)", ctx), ParseError);
  CHECK_THROWS_AS(parse_tree("(v0 NAND f0)", ctx), ParseError);
  CHECK_THROWS_AS(parse_tree("IF(v0, f0, f1) junk", ctx), ParseError);
  try {
    parse_tree("IF(v0, f9, f1)", ctx);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 7);
  }
}

TEST_CASE("random serialized trees survive a round trip") {
  Rng rng(31);
  TerminalContext ctx = abstract_ctx(2, 4);
  for (int i = 0; i < 500; ++i) {
    GpTree t = random_tree(ctx, 5, rng);
    CHECK(parse_tree(serialize_tree(t), ctx) == t);
  }
}
