#include <gtest/gtest.h>

#include "reeslab/ideal_ops.hpp"

using namespace reeslab;

namespace {
std::vector<std::string> strs(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(poly_to_string(p));
  return out;
}
std::vector<std::string> gb_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : groebner_basis(I).basis) out.push_back(poly_to_string(g));
  return out;
}
}  // namespace

TEST(IdealOps, MinimalGeneratorsMonomial) {
  auto R = make_ring(101, {"x", "y"});
  Ideal I = parse_ideal(R, {"x^2*y", "x^2", "y^3", "x*y^5", "x^2"});
  EXPECT_EQ(strs(minimal_generators(I)),
            (std::vector<std::string>{"x^2", "y^3"}));
  EXPECT_EQ(max_gen_degree(I), 3);
}

TEST(IdealOps, MinimalGeneratorsGeneral) {
  auto R = make_ring(101, {"x", "y"});
  Ideal I = parse_ideal(R, {"x^2", "x^2*y", "y^3 + x^2*y", "y^3"});
  auto mg = minimal_generators(I);
  EXPECT_EQ(mg.size(), 2u);
  EXPECT_EQ(max_gen_degree(I), 3);
  // The kept pair generates the same ideal.
  EXPECT_EQ(gb_strings(Ideal(R, mg)), gb_strings(I));
}

TEST(IdealOps, MinimalGeneratorsModuloBackground) {
  auto R = make_ring(101, {"x", "y", "z"});
  Ideal J = parse_ideal(R, {"x*y"});
  // In R/J, x*y*z and x^2*y are zero; only z^2 survives.
  Ideal I = parse_ideal(R, {"x*y*z", "z^2", "x^2*y"});
  EXPECT_EQ(strs(minimal_generators(I, &J)),
            (std::vector<std::string>{"z^2"}));
  EXPECT_EQ(max_gen_degree(I, &J), 2);
}

TEST(IdealOps, PowersOfMonomialIdeals) {
  auto R = make_ring(101, {"x", "y"});
  Ideal m = parse_ideal(R, {"x", "y"});
  EXPECT_EQ(strs(ideal_power(m, 3).gens()),
            (std::vector<std::string>{"y^3", "x*y^2", "x^2*y", "x^3"}));
  Ideal I = parse_ideal(R, {"x^2", "y^3"});
  EXPECT_EQ(ideal_power(I, 2).gens().size(), 3u);
  EXPECT_EQ(strs(ideal_power(I, 0).gens()), (std::vector<std::string>{"1"}));
  EXPECT_THROW(ideal_power(I, -1), Error);
}

TEST(IdealOps, PowerAdditivityOnTwistedCubic) {
  auto R = make_ring(32003, {"a", "b", "c", "d"});
  Ideal I = parse_ideal(R, {"b^2 - a*c", "b*c - a*d", "c^2 - b*d"});
  Ideal I2 = ideal_power(I, 2);
  Ideal I3 = ideal_power(I, 3);
  EXPECT_EQ(gb_strings(I3), gb_strings(ideal_product(I, I2)));
  EXPECT_EQ(gb_strings(I2), gb_strings(ideal_product(I, I)));
  for (const auto& g : I2.gens()) EXPECT_EQ(g.bideg()->total(), 4);
  EXPECT_EQ(I2.gens().size(), 6u);
}

TEST(IdealOps, SumBehaves) {
  auto R = make_ring(101, {"x", "y"});
  Ideal A = parse_ideal(R, {"x^2"});
  Ideal B = parse_ideal(R, {"y"});
  EXPECT_EQ(gb_strings(ideal_sum(A, B)),
            (std::vector<std::string>{"y", "x^2"}));
}
