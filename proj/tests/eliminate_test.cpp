#include <gtest/gtest.h>

#include "reeslab/eliminate.hpp"

using namespace reeslab;

namespace {
std::vector<std::string> gb_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : groebner_basis(I).basis) out.push_back(poly_to_string(g));
  return out;
}
}  // namespace

TEST(Eliminate, UnivariateResultant) {
  auto R = make_ring(101, {"x", "y"});
  Ideal I = parse_ideal(R, {"x - y^2", "y^3 - 1"});
  EliminationResult e = eliminate(I, {1});
  ASSERT_EQ(e.ring->nvars(), 1);
  EXPECT_EQ(e.ring->var_name(0), "x");
  EXPECT_EQ(gb_strings(e.ideal), (std::vector<std::string>{"x^3 - 1"}));
  EXPECT_EQ(e.kept, (std::vector<int>{0}));
}

TEST(Eliminate, KeepsBidegrees) {
  auto R = make_ring(101, {"x", "y", "T"}, {{1, 0}, {1, 0}, {0, 1}});
  Ideal I = parse_ideal(R, {"x*T - y*T"});
  EliminationResult e = eliminate(I, {2});
  EXPECT_EQ(e.ring->nvars(), 2);
  EXPECT_EQ(e.ring->var_bideg(0), (Bideg{1, 0}));
  EXPECT_TRUE(e.ideal.is_zero());  // (x-y)T meets k[x,y] trivially
}

TEST(Eliminate, DropNothingIsIdentityUpToRing) {
  auto R = make_ring(101, {"x", "y"});
  Ideal I = parse_ideal(R, {"x^2 + y^2"});
  EliminationResult e = eliminate(I, {});
  EXPECT_EQ(gb_strings(e.ideal), (std::vector<std::string>{"x^2 + y^2"}));
}

TEST(Kernel, VeroneseConicAndTwistedCubic) {
  auto S2 = make_ring(32003, {"z0", "z1", "z2"});
  auto T = make_ring(32003, {"s", "u"});
  RingMap v2(S2, T,
             {parse_poly(T, "s^2"), parse_poly(T, "s*u"), parse_poly(T, "u^2")});
  EXPECT_EQ(gb_strings(kernel_of_map(v2)),
            (std::vector<std::string>{"z1^2 - z0*z2"}));

  auto S3 = make_ring(32003, {"a", "b", "c", "d"});
  RingMap v3(S3, T,
             {parse_poly(T, "s^3"), parse_poly(T, "s^2*u"),
              parse_poly(T, "s*u^2"), parse_poly(T, "u^3")});
  EXPECT_EQ(gb_strings(kernel_of_map(v3)),
            (std::vector<std::string>{"c^2 - b*d", "b*c - a*d", "b^2 - a*c"}));
}

TEST(Kernel, GraphOfPartialIdentity) {
  auto S = make_ring(101, {"x", "y"});
  auto T = make_ring(101, {"s"});
  RingMap phi(S, T, {parse_poly(T, "s"), parse_poly(T, "s^2")});
  EXPECT_EQ(gb_strings(kernel_of_map(phi)),
            (std::vector<std::string>{"x^2 - y"}));
}

TEST(Kernel, SurjectionOntoQuotientHasZeroKernelOnlyIfInjective) {
  // phi: k[x,y] -> k[s,u], x -> s, y -> u is injective on variables.
  auto S = make_ring(101, {"x", "y"});
  auto T = make_ring(101, {"s", "u"});
  RingMap phi(S, T, {parse_poly(T, "s"), parse_poly(T, "u")});
  EXPECT_TRUE(kernel_of_map(phi).is_zero());
}

TEST(Transport, RemapsVariablesByIndex) {
  auto A = make_ring(101, {"x", "y"});
  auto B = make_ring(101, {"p", "q", "r"});
  Polynomial f = parse_poly(A, "x^2*y - 3*y");
  Polynomial g = transport_poly(f, B, {2, 0});  // x->r, y->p
  EXPECT_EQ(poly_to_string(g), "p*r^2 - 3*p");
  EXPECT_THROW(transport_poly(f, B, {-1, 0}), Error);
}
