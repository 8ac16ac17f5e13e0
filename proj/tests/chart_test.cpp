#include "reeslab/chart.hpp"

#include <gtest/gtest.h>

#include "reeslab/a_invariants.hpp"
#include "reeslab/ideal.hpp"

namespace reeslab {
namespace {

bool same_poly(const Polynomial& a, const Polynomial& b) {
  return poly_sub(a, b).is_zero();
}

TEST(Chart, DehomogenizeDropsTheChartVariable) {
  RingPtr R = make_ring(101, {"x", "y", "z"});
  Chart ch = chart_at(R, 0);
  EXPECT_EQ(ch.var, 0);
  EXPECT_FALSE(ch.ring->graded());
  ASSERT_EQ(ch.ring->nvars(), 2);
  EXPECT_EQ(ch.ring->var_name(0), "y");
  EXPECT_EQ(ch.ring->var_name(1), "z");

  Polynomial f = parse_poly(R, "x^2*y + x*z - x");
  Polynomial g = dehomogenize(ch, f);
  EXPECT_TRUE(same_poly(g, parse_poly(ch.ring, "y + z - 1")));
}

TEST(Chart, VariableMapSkipsTheChartVariable) {
  RingPtr R = make_ring(101, {"x", "y", "z"});
  Chart ch = chart_at(R, 1);
  ASSERT_EQ(ch.var_map.size(), 3u);
  EXPECT_EQ(ch.var_map[0], 0);
  EXPECT_EQ(ch.var_map[1], -1);
  EXPECT_EQ(ch.var_map[2], 1);
  EXPECT_EQ(ch.ring->var_name(0), "x");
  EXPECT_EQ(ch.ring->var_name(1), "z");
}

TEST(Chart, TermsMayCancelAfterSettingTheVariableToOne) {
  RingPtr R = make_ring(101, {"x", "y"});
  Chart ch = chart_at(R, 0);
  Polynomial f = parse_poly(R, "x*y - y");
  EXPECT_TRUE(dehomogenize(ch, f).is_zero());
}

TEST(Chart, IdealDehomogenization) {
  RingPtr R = make_ring(101, {"x", "y", "z"});
  Chart ch = chart_at(R, 2);
  Ideal I = parse_ideal(R, {"x^2 - y*z", "y^3"});
  Ideal J = dehomogenize(ch, I);
  ASSERT_EQ(J.gens().size(), 2u);
  EXPECT_TRUE(same_poly(J.gens()[0], parse_poly(ch.ring, "x^2 - y")));
  EXPECT_TRUE(same_poly(J.gens()[1], parse_poly(ch.ring, "y^3")));
}

TEST(Chart, RejectsBadIndices) {
  RingPtr R = make_ring(101, {"x", "y"});
  EXPECT_THROW(chart_at(R, -1), Error);
  EXPECT_THROW(chart_at(R, 2), Error);
  RingPtr one = make_ring(101, {"x"});
  EXPECT_THROW(chart_at(one, 0), Error);
}

TEST(Chart, QuadricConeChartIsCohenMacaulay) {
  RingPtr R = make_ring(101, {"x", "y", "z", "w"});
  Ideal I = parse_ideal(R, {"x*w - y*z"});
  Chart ch = chart_at(R, 0);
  AffineCMReport rep = is_cm_equidim_affine(dehomogenize(ch, I));
  EXPECT_TRUE(rep.cm);
  EXPECT_FALSE(rep.empty);
  EXPECT_EQ(rep.codim, 1);
}

}  // namespace
}  // namespace reeslab
