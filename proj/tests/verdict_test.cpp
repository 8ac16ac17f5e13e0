#include "reeslab/verdict.hpp"

#include <gtest/gtest.h>

namespace reeslab {
namespace {

BlowupInstance plane_at_origin() {
  RingPtr R = make_ring(101, {"x", "y"});
  return make_blowup(R, Ideal(R, {}), parse_ideal(R, {"x", "y"}), "plane");
}

BlowupInstance cusp_divisor() {
  RingPtr R = make_ring(101, {"x", "y", "z"});
  return make_blowup(R, parse_ideal(R, {"x*y^2 - z^3"}),
                     parse_ideal(R, {"x"}), "cusp");
}

const HypothesisCheck& find_hyp(const TheoremVerdict& V,
                                const std::string& name) {
  for (const auto& h : V.hypotheses)
    if (h.name == name) return h;
  throw std::runtime_error("missing hypothesis: " + name);
}

TEST(Verdict, PlaneDiagonalPredictionFiresAndIsRight) {
  TheoremVerdict V =
      theorem_verdict(plane_at_origin(), 1, 2, VerdictTarget::diagonal);
  EXPECT_EQ(V.d, 1);
  EXPECT_EQ(V.epsilon, 0);
  EXPECT_EQ(V.epsilon_star, 0);
  EXPECT_TRUE(V.locally_cm);
  EXPECT_EQ(V.e0_upper, 0);
  EXPECT_EQ(V.base_a_star, -2);
  EXPECT_FALSE(find_hyp(V, "base_a_star_negative").required);
  EXPECT_TRUE(find_hyp(V, "base_a_star_negative").certified);
  EXPECT_TRUE(find_hyp(V, "power_bound").certified);
  EXPECT_TRUE(find_hyp(V, "slice_degree_bound").certified);
  EXPECT_TRUE(V.predicted_cm);
  EXPECT_TRUE(V.computed.cm);
  EXPECT_TRUE(V.agreement);
}

TEST(Verdict, PlaneTruncatedReesPrediction) {
  TheoremVerdict V =
      theorem_verdict(plane_at_origin(), 1, 2, VerdictTarget::truncated_rees);
  EXPECT_TRUE(find_hyp(V, "base_a_star_negative").required);
  EXPECT_TRUE(V.predicted_cm);
  EXPECT_TRUE(V.computed.cm);
  EXPECT_TRUE(V.agreement);
}

TEST(Verdict, BoundaryDegreeWithholdsThePrediction) {
  TheoremVerdict V =
      theorem_verdict(plane_at_origin(), 1, 1, VerdictTarget::diagonal);
  EXPECT_FALSE(find_hyp(V, "slice_degree_bound").certified);
  EXPECT_FALSE(V.predicted_cm);
  // The degree-one diagonal is the base ring itself, which is CM: the
  // theorem stays silent without being contradicted.
  EXPECT_TRUE(V.computed.cm);
  EXPECT_TRUE(V.agreement);
}

TEST(Verdict, CuspTruncationIsRefusedAndReallyFails) {
  TheoremVerdict V =
      theorem_verdict(cusp_divisor(), 1, 2, VerdictTarget::truncated_rees);
  EXPECT_EQ(V.base_a_star, 0);
  EXPECT_FALSE(find_hyp(V, "base_a_star_negative").certified);
  EXPECT_TRUE(find_hyp(V, "base_a_star_negative").required);
  EXPECT_FALSE(V.predicted_cm);
  EXPECT_FALSE(V.computed.cm);
  EXPECT_TRUE(V.agreement);
}

TEST(Verdict, RejectsNonpositivePowers) {
  EXPECT_THROW(
      theorem_verdict(plane_at_origin(), 0, 2, VerdictTarget::diagonal),
      Error);
}

}  // namespace
}  // namespace reeslab
