#include <gtest/gtest.h>

#include <vector>

#include "reeslab/monomial.hpp"
#include "reeslab/order.hpp"

using namespace reeslab;

namespace {
Expo mk(std::initializer_list<int> es) {
  Expo m;
  int i = 0;
  for (int e : es) m.e[i++] = int16_t(e);
  return m;
}
}  // namespace

TEST(Monomial, BasicOps) {
  Expo a = mk({2, 0, 1});
  Expo b = mk({1, 2, 0});
  EXPECT_EQ(total_degree(a, 3), 3);
  EXPECT_EQ(total_degree(mk({}), 3), 0);
  EXPECT_TRUE(divides(mk({1, 0, 0}), a, 3));
  EXPECT_FALSE(divides(b, a, 3));
  EXPECT_EQ(mono_mul(a, b, 3), mk({3, 2, 1}));
  EXPECT_EQ(mono_div(mk({3, 2, 1}), b, 3), a);
  EXPECT_EQ(mono_lcm(a, b, 3), mk({2, 2, 1}));
  EXPECT_TRUE(mono_coprime(mk({2, 0, 0}), mk({0, 3, 1}), 3));
  EXPECT_FALSE(mono_coprime(a, b, 3));
  EXPECT_TRUE(is_one(mk({}), 3));
  EXPECT_FALSE(is_one(a, 3));
}

TEST(Order, DegrevlexClassicComparisons) {
  MonomialOrder o = MonomialOrder::make_degrevlex();
  // Degree dominates.
  EXPECT_GT(o.cmp(mk({2, 0, 0}), mk({1, 0, 0}), 3), 0);
  // Equal degree: smaller exponent in the last differing variable wins.
  // x*y^2 > x^2*z.
  EXPECT_GT(o.cmp(mk({1, 2, 0}), mk({2, 0, 1}), 3), 0);
  // x > y > z.
  EXPECT_GT(o.cmp(mk({1, 0, 0}), mk({0, 1, 0}), 3), 0);
  EXPECT_GT(o.cmp(mk({0, 1, 0}), mk({0, 0, 1}), 3), 0);
  EXPECT_EQ(o.cmp(mk({1, 1, 1}), mk({1, 1, 1}), 3), 0);
}

TEST(Order, LexComparisons) {
  MonomialOrder o = MonomialOrder::make_lex();
  EXPECT_GT(o.cmp(mk({1, 0, 0}), mk({0, 5, 5}), 3), 0);  // x > y^5 z^5
  EXPECT_GT(o.cmp(mk({1, 1, 0}), mk({1, 0, 9}), 3), 0);  // xy > x z^9
  EXPECT_LT(o.cmp(mk({0, 0, 3}), mk({0, 1, 0}), 3), 0);  // z^3 < y
}

TEST(Order, BlockOrderEliminatesFrontBlock) {
  // Split after variable 0: any power of var0 beats anything in vars 1..2.
  MonomialOrder o = MonomialOrder::make_block(1);
  EXPECT_GT(o.cmp(mk({1, 0, 0}), mk({0, 7, 7}), 3), 0);
  // Equal front block: compare back block by degrevlex.
  EXPECT_GT(o.cmp(mk({1, 2, 0}), mk({1, 0, 1}), 3), 0);
  EXPECT_GT(o.cmp(mk({2, 0, 0}), mk({1, 9, 9}), 3), 0);
}

TEST(Order, WeightedRespectsWeights) {
  MonomialOrder o = MonomialOrder::make_weighted({1, 3});
  EXPECT_GT(o.cmp(mk({0, 1}), mk({2, 0}), 2), 0);  // w(y)=3 > w(x^2)=2
  EXPECT_LT(o.cmp(mk({2, 0}), mk({0, 1}), 2), 0);
  // Equal weight 3: fall back to a tie-break, but stay antisymmetric.
  int r = o.cmp(mk({3, 0}), mk({0, 1}), 2);
  EXPECT_EQ(-r, o.cmp(mk({0, 1}), mk({3, 0}), 2));
  EXPECT_NE(r, 0);
}

TEST(Order, TotalOrderProperties) {
  // Antisymmetry + transitivity + multiplicativity spot checks on a grid.
  std::vector<Expo> ms;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) ms.push_back(mk({a, b, c}));
  for (auto kind : {MonomialOrder::make_degrevlex(), MonomialOrder::make_lex(),
                    MonomialOrder::make_block(1),
                    MonomialOrder::make_weighted({2, 1, 1})}) {
    for (const auto& a : ms)
      for (const auto& b : ms) {
        EXPECT_EQ(kind.cmp(a, b, 3), -kind.cmp(b, a, 3));
        if (a == b) continue;
        // 1 is the minimum (all weights positive).
        if (is_one(a, 3)) EXPECT_LT(kind.cmp(a, b, 3), 0);
        // Multiplicative: a<b implies ac<bc.
        int r = kind.cmp(a, b, 3);
        Expo c = mk({1, 2, 0});
        EXPECT_EQ(kind.cmp(mono_mul(a, c, 3), mono_mul(b, c, 3), 3), r);
      }
  }
}
