#include "reeslab/rees.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "reeslab/calibration.hpp"

namespace reeslab {
namespace {

BlowupInstance plane_at_origin(int64_t p = 101) {
  RingPtr R = make_ring(p, {"x", "y"});
  return make_blowup(R, Ideal(R, {}), parse_ideal(R, {"x", "y"}), "plane");
}

BlowupInstance cusp_divisor() {
  RingPtr R = make_ring(101, {"x", "y", "z"});
  return make_blowup(R, parse_ideal(R, {"x*y^2 - z^3"}),
                     parse_ideal(R, {"x"}), "cusp");
}

TEST(Blowup, ValidatesItsInputs) {
  RingPtr R = make_ring(101, {"x", "y"});
  // Zero ideal has height zero on the base.
  EXPECT_THROW(make_blowup(R, Ideal(R, {}), Ideal(R, {})), Error);
  // Inhomogeneous data is rejected.
  EXPECT_THROW(make_blowup(R, Ideal(R, {}), parse_ideal(R, {"x - 1"})),
               Error);
  // The base ring must be nonzero.
  EXPECT_THROW(
      make_blowup(R, parse_ideal(R, {"1"}), parse_ideal(R, {"x"})), Error);
  // Ideals must live in the ambient ring.
  RingPtr R2 = make_ring(101, {"x", "y"});
  EXPECT_THROW(make_blowup(R, Ideal(R, {}), parse_ideal(R2, {"x"})), Error);
}

TEST(Blowup, PlaneBaseInvariants) {
  BlowupInstance B = plane_at_origin();
  EXPECT_EQ(base_dim(B), 2);
  EXPECT_EQ(base_a_star(B), -2);
}

TEST(Blowup, PowersOfTheMaximalIdealOfThePlane) {
  BlowupInstance B = plane_at_origin();
  // The degree-n piece of the quotient by m^n tops out at n - 1, which is
  // exactly the a-invariant contributed by the finite part.
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(a_star_of_power(B, n), n - 1);
  ModMatrix P1 = ideal_module_presentation(B, 1);
  EXPECT_EQ(P1.nrows(), 2);  // x and y
  AInvariants A = a_invariants(P1);
  EXPECT_EQ(A.dim, 2);
  // Koszul: one step of syzygies, so depth lags the dimension by one.
  EXPECT_EQ(A.depth, 1);
}

TEST(Rees, PlaneBlowupPresentation) {
  BlowupInstance B = plane_at_origin();
  ReesPresentation S = rees_presentation(B);
  EXPECT_EQ(S.base_vars, 2);
  EXPECT_EQ(S.fiber_vars, 2);
  EXPECT_EQ(S.dim, 3);
  EXPECT_TRUE(S.equigenerated);
  ASSERT_EQ(S.ideal.gens().size(), 1u);
  EXPECT_EQ(*S.ideal.gens()[0].bideg(), (Bideg{2, 1}));
  // Standard regrading keeps the generators verbatim but moves the fiber
  // weight out of the x component.
  EXPECT_EQ(*S.std_ideal().gens()[0].bideg(), (Bideg{1, 1}));
  EXPECT_EQ(S.std_ambient()->var_bideg(2), (Bideg{0, 1}));

  CMReport cm = is_cm_graded_quotient(S.ideal);
  EXPECT_TRUE(cm.cm);
  EXPECT_EQ(cm.dim, 3);

  LocalCMReport loc = locally_cm_on_proj(S);
  EXPECT_TRUE(loc.all_cm);
  ASSERT_EQ(loc.charts.size(), 2u);
  EXPECT_EQ(loc.charts[0].chart_var, "x");
}

TEST(Rees, FiberVariableNamesAvoidTheBaseNames) {
  RingPtr R = make_ring(101, {"w1", "w2"});
  BlowupInstance B =
      make_blowup(R, Ideal(R, {}), parse_ideal(R, {"w1", "w2"}), "shadow");
  ReesPresentation S = rees_presentation(B);
  std::set<std::string> names(S.ambient->var_names().begin(),
                              S.ambient->var_names().end());
  EXPECT_EQ(names.size(), 4u);
  EXPECT_TRUE(names.count("ww1"));
}

TEST(Rees, GeneratorOverrideBuildsTheLargerAlgebra) {
  BlowupInstance B = plane_at_origin();
  Ideal square = parse_ideal(B.ambient, {"x^2", "x*y", "y^2"});
  ReesPresentation S = rees_presentation(B, square);
  EXPECT_EQ(S.fiber_vars, 3);
  EXPECT_EQ(S.dim, 3);
  // The square of the maximal ideal is the second Veronese in disguise:
  // one quadratic relation among the three fiber variables pins it down.
  CMReport cm = is_cm_graded_quotient(S.ideal);
  EXPECT_TRUE(cm.cm);
}

TEST(Slice, CanonicalAcrossGeneratorPresentations) {
  RingPtr R = make_ring(101, {"x", "y"});
  Ideal I1 = parse_ideal(R, {"x", "y"});
  Ideal I2 = parse_ideal(R, {"y", "x", "x + y"});
  SliceBasis a = ideal_slice(I1, 1, 2);
  SliceBasis b = ideal_slice(I2, 1, 2);
  ASSERT_EQ(a.dim(), 3);
  ASSERT_EQ(b.dim(), 3);
  for (int i = 0; i < 3; ++i)
    EXPECT_TRUE(poly_sub(a.basis[size_t(i)], b.basis[size_t(i)]).is_zero());
}

TEST(Slice, QuotientBaseReducesAgainstTheRelations) {
  BlowupInstance B = cusp_divisor();
  // Degree-3 part of (x) on the cusp base: x times the six degree-2
  // monomials, with x*y^2 rewritten to z^3 by the relation.
  SliceBasis s = ideal_slice(B.ideal, 1, 3, &B.rels);
  EXPECT_EQ(s.dim(), 6);
  bool has_z3 = false;
  for (const auto& f : s.basis)
    if (poly_sub(f, parse_poly(B.ambient, "z^3")).is_zero()) has_z3 = true;
  EXPECT_TRUE(has_z3);
}

TEST(Slice, TruncationGeneratorsAndFlags) {
  BlowupInstance B = plane_at_origin();
  TruncationGenerators tg = truncation_generators(B.ideal, 1, 2);
  EXPECT_EQ(tg.ideal.gens().size(), 3u);
  EXPECT_EQ(tg.max_gen_degree, 1);
  EXPECT_FALSE(tg.below_generation_degree);

  TruncationGenerators low = truncation_generators(B.ideal, 1, 0);
  EXPECT_TRUE(low.ideal.gens().empty());
  EXPECT_TRUE(low.below_generation_degree);

  EXPECT_THROW(truncation_generators(B.ideal, 0, 2), Error);
}

TEST(Rees, TruncatedPresentationIsEquigenerated) {
  BlowupInstance B = plane_at_origin();
  ReesPresentation T = truncated_rees_presentation(B, 1, 2);
  EXPECT_EQ(T.fiber_vars, 3);
  EXPECT_TRUE(T.equigenerated);
  EXPECT_EQ(T.dim, 3);
  for (const auto& g : T.fiber_gens) EXPECT_EQ(g.bideg()->x, 2);
}

TEST(Diagonal, VeroneseOfThePlane) {
  BlowupInstance B = plane_at_origin();
  DiagonalPresentation D = diagonal_presentation(B, 1, 2);
  EXPECT_EQ(D.ring->nvars(), 3);
  ASSERT_EQ(D.images.size(), 3u);
  CMReport cm = is_cm_graded_quotient(D.ideal);
  EXPECT_TRUE(cm.cm);
  EXPECT_EQ(cm.dim, 2);
  // Hilbert function of the second Veronese: 1, 3, 5, 7, ...
  ModMatrix pres = presentation_of_quotient(D.ideal);
  EXPECT_EQ(hilbert_function(pres, Bideg{0, 0}), 1);
  EXPECT_EQ(hilbert_function(pres, Bideg{1, 0}), 3);
  EXPECT_EQ(hilbert_function(pres, Bideg{2, 0}), 5);

  EXPECT_THROW(diagonal_presentation(B, 1, 0), Error);
}

TEST(Cusp, BaseAndBlowupAlgebra) {
  BlowupInstance B = cusp_divisor();
  EXPECT_EQ(base_dim(B), 2);
  EXPECT_EQ(base_a_star(B), 0);
  // The divisor class is free of rank one, so its powers grow linearly.
  for (int n = 1; n <= 2; ++n) EXPECT_EQ(a_star_of_power(B, n), n);
  ReesPresentation S = rees_presentation(B);
  EXPECT_EQ(S.fiber_vars, 1);
  EXPECT_EQ(S.dim, 3);
  CMReport cm = is_cm_graded_quotient(S.ideal);
  EXPECT_TRUE(cm.cm);
  LocalCMReport loc = locally_cm_on_proj(S);
  EXPECT_TRUE(loc.all_cm);
}

TEST(Calibration, GatesTheFiberGradingInvariants) {
  BlowupInstance B = plane_at_origin(211);
  ReesPresentation S = rees_presentation(B);
  ASSERT_FALSE(is_calibrated(211));
  EXPECT_THROW(rees_t_grading_a_star(S, ReesModule::structure),
               CalibrationError);
  const CalibrationRecord& rec = ensure_calibrated(211);
  EXPECT_EQ(rec.characteristic, 211);
  EXPECT_EQ(rec.checks.size(), 6u);
  EXPECT_EQ(rees_t_grading_a_star(S, ReesModule::structure), -1);
  EXPECT_EQ(rees_t_grading_a_star(S, ReesModule::canonical), 0);
}

TEST(Rees, BigradedInvariantsOfThePlaneBlowup) {
  BlowupInstance B = plane_at_origin();
  ReesPresentation S = rees_presentation(B);
  BigradedAInvariants W = bigraded_a_invariants(S);
  EXPECT_EQ(W.codim, 1);
  ASSERT_EQ(W.omega_gens.size(), 1u);  // Gorenstein: principal dual
  EXPECT_EQ(W.omega_gens[0], (Bideg{1, 1}));
  EXPECT_EQ(W.a_x, -1);
  EXPECT_EQ(W.a_t, -1);
}

}  // namespace
}  // namespace reeslab
