#include <gtest/gtest.h>

#include "reeslab/ideal.hpp"
#include "reeslab/polynomial.hpp"
#include "reeslab/ring.hpp"
#include "reeslab/ring_map.hpp"

using namespace reeslab;

namespace {
RingPtr R3() { return make_ring(101, {"x", "y", "z"}); }
}  // namespace

TEST(Ring, FactoryValidation) {
  EXPECT_NO_THROW(make_ring(2, {"x"}));
  EXPECT_THROW(make_ring(101, {}), Error);
  EXPECT_THROW(make_ring(101, {"x", "x"}), Error);
  EXPECT_THROW(make_ring(4, {"x"}), Error);
  EXPECT_THROW(make_ring(101, {"x"}, {Bideg{0, 0}}), Error);
  EXPECT_THROW(make_ring(101, {"x"}, {Bideg{-1, 0}}), Error);
  EXPECT_THROW(
      make_ring(101, {"x", "y"}, {}, MonomialOrder::make_weighted({1})),
      Error);
  std::vector<std::string> too_many;
  for (int i = 0; i < kMaxVars + 1; ++i)
    too_many.push_back("v" + std::to_string(i));
  EXPECT_THROW(make_ring(101, too_many), Error);
}

TEST(Ring, BidegreesAndSigma) {
  auto R = make_ring(101, {"x", "y", "T"}, {{1, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(R->sigma(), (Bideg{2, 1}));
  Expo m;
  m.e[0] = 2;
  m.e[2] = 3;
  EXPECT_EQ(R->mono_bideg(m), (Bideg{2, 3}));
  EXPECT_TRUE(R->graded());
  EXPECT_EQ(R->var_index("T"), 2);
  EXPECT_EQ(R->var_index("w"), -1);
}

TEST(Poly, ParsePrintRoundTrip) {
  auto R = R3();
  for (const char* s :
       {"x", "3*x^2*y - 2", "x + y + z", "x*y*z", "100", "x^2 - y^2",
        "5*x^3 - 4*x*y*z + 7*z - 1"}) {
    Polynomial f = parse_poly(R, s);
    Polynomial g = parse_poly(R, poly_to_string(f));
    EXPECT_EQ(poly_to_string(f), poly_to_string(g));
    EXPECT_EQ(f.terms().size(), g.terms().size());
  }
  EXPECT_EQ(poly_to_string(parse_poly(R, "x - 2*y")), "x - 2*y");
  EXPECT_EQ(poly_to_string(parse_poly(R, "99*y")), "-2*y");
  EXPECT_EQ(poly_to_string(parse_poly(R, "0")), "0");
  EXPECT_EQ(poly_to_string(parse_poly(R, "y + x")), "x + y");
  EXPECT_EQ(poly_to_string(parse_poly(R, "2*3*x")), "6*x");
  EXPECT_EQ(poly_to_string(parse_poly(R, "x*x*x")), "x^3");
  EXPECT_EQ(poly_to_string(parse_poly(R, "-x + -y")), "-x - y");
  EXPECT_EQ(poly_to_string(parse_poly(R, "101*x + y")), "y");
}

TEST(Poly, ParseErrors) {
  auto R = R3();
  EXPECT_THROW(parse_poly(R, ""), ParseError);
  EXPECT_THROW(parse_poly(R, "x +"), ParseError);
  EXPECT_THROW(parse_poly(R, "w"), ParseError);
  EXPECT_THROW(parse_poly(R, "x^"), ParseError);
  EXPECT_THROW(parse_poly(R, "x & y"), ParseError);
  EXPECT_THROW(parse_poly(R, "* x"), ParseError);
  bool threw = false;
  try {
    parse_poly(R, "x + q*y");
  } catch (const ParseError& e) {
    threw = true;
    EXPECT_EQ(e.position, 4);
  }
  EXPECT_TRUE(threw);
}

TEST(Poly, Arithmetic) {
  auto R = R3();
  auto P = [&](const char* s) { return parse_poly(R, s); };
  EXPECT_EQ(poly_to_string(poly_mul(P("x + y"), P("x + y"))),
            "x^2 + 2*x*y + y^2");
  EXPECT_EQ(poly_to_string(poly_mul(P("x + y"), P("x - y"))), "x^2 - y^2");
  EXPECT_TRUE(poly_sub(P("x + y"), P("x + y")).is_zero());
  EXPECT_EQ(poly_to_string(poly_scale(P("x + 2*y"), 50)), "50*x - y");
  EXPECT_EQ(poly_to_string(poly_monic(P("7*x + 14*y"))), "x + 2*y");

  auto R5 = make_ring(5, {"x", "y"});
  Polynomial f = parse_poly(R5, "x + y");
  Polynomial pw = Polynomial::constant(R5, 1);
  for (int i = 0; i < 5; ++i) pw = poly_mul(pw, f);
  EXPECT_EQ(poly_to_string(pw), "x^5 + y^5");  // Frobenius
}

TEST(Poly, HomogeneityAndDegrees) {
  auto R = make_ring(101, {"x", "y", "T"}, {{1, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(parse_poly(R, "x^2*T - y^2*T").bideg(), (Bideg{2, 1}));
  EXPECT_FALSE(parse_poly(R, "x + T").bideg().has_value());
  EXPECT_FALSE(parse_poly(R, "x + T").is_homogeneous());
  EXPECT_TRUE(parse_poly(R, "x*T + y*T").is_homogeneous());
  EXPECT_TRUE(Polynomial::zero(R).is_homogeneous());
  EXPECT_EQ(parse_poly(R, "x^3 + x*T").max_total_degree(), 3);
}

TEST(Poly, LeadTermFollowsRingOrder) {
  auto Rlex = make_ring(101, {"x", "y", "z"}, {}, MonomialOrder::make_lex());
  Polynomial f = parse_poly(Rlex, "y^5 + x");
  EXPECT_EQ(mono_to_string(*Rlex, f.lead().m), "x");
  auto Rd = R3();
  Polynomial g = parse_poly(Rd, "y^5 + x");
  EXPECT_EQ(mono_to_string(*Rd, g.lead().m), "y^5");
}

TEST(RingMap, SubstitutionAndKernelWitness) {
  auto S = make_ring(101, {"a", "b", "c"});
  auto T = make_ring(101, {"s", "t"});
  RingMap phi(S, T,
              {parse_poly(T, "s^2"), parse_poly(T, "s*t"), parse_poly(T, "t^2")});
  EXPECT_TRUE(phi.apply(parse_poly(S, "a*c - b^2")).is_zero());
  EXPECT_EQ(poly_to_string(phi.apply(parse_poly(S, "a + c"))), "s^2 + t^2");
  EXPECT_THROW(RingMap(S, T, {parse_poly(T, "s")}), Error);
  EXPECT_THROW(phi.apply(parse_poly(T, "s")), Error);
}

TEST(Ideal, ConstructionAndCache) {
  auto R = R3();
  Ideal I = parse_ideal(R, {"x*y - z^2", "0", "x^2"});
  EXPECT_EQ(I.gens().size(), 2u);  // zero generator dropped
  EXPECT_TRUE(I.is_homogeneous());
  Ideal J = parse_ideal(R, {"x + 1"});
  EXPECT_FALSE(J.is_homogeneous());
  EXPECT_TRUE(Ideal(R, {}).is_zero());
}
