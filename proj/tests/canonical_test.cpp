#include "reeslab/canonical.hpp"

#include <gtest/gtest.h>

#include "reeslab/hilbert.hpp"

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

TEST(Strand, AlgebraStrandsMatchTheSliceDimensions) {
  BlowupInstance B = plane_at_origin();
  ReesPresentation S = rees_presentation(B);
  for (int n = 1; n <= 3; ++n) {
    ModMatrix piece = algebra_strand(S, n);
    for (int x = 0; x <= 6; ++x)
      EXPECT_EQ(hilbert_function(piece, Bideg{x, 0}),
                slice_dim(B.ideal, n, x))
          << "n=" << n << " x=" << x;
  }
}

TEST(Strand, DegreeZeroStrandIsTheBaseRing) {
  BlowupInstance B = plane_at_origin();
  ReesPresentation S = rees_presentation(B);
  ModMatrix piece = algebra_strand(S, 0);
  ASSERT_EQ(piece.nrows(), 1);
  EXPECT_EQ(piece.row_degs[0], (Bideg{0, 0}));
  for (int x = 0; x <= 4; ++x)
    EXPECT_EQ(hilbert_function(piece, Bideg{x, 0}), x + 1);
}

TEST(Strand, QuotientBaseStrandsMatchTheReducedSlices) {
  BlowupInstance B = cusp_divisor();
  ReesPresentation S = rees_presentation(B);
  for (int n = 1; n <= 2; ++n) {
    ModMatrix piece = algebra_strand(S, n);
    for (int x = 0; x <= 5; ++x)
      EXPECT_EQ(hilbert_function(piece, Bideg{x, 0}),
                slice_dim(B.ideal, n, x, &B.rels))
          << "n=" << n << " x=" << x;
  }
}

TEST(Canonical, PlaneBlowupIsGorenstein) {
  BlowupInstance B = plane_at_origin();
  ReesPresentation S = rees_presentation(B);
  CanonicalModule W = canonical_module_rees(S);
  EXPECT_EQ(W.codim, 1);
  ASSERT_EQ(W.pres.nrows(), 1);
  EXPECT_EQ(W.pres.row_degs[0], (Bideg{2, 1}));
}

TEST(Canonical, StrandsOfThePlaneBlowupDual) {
  BlowupInstance B = plane_at_origin();
  ReesPresentation S = rees_presentation(B);
  CanonicalModule W = canonical_module_rees(S);

  // First strand: a free rank-one piece shifted by the dual generator.
  ModMatrix w1 = canonical_strand(S, W, 1);
  AInvariants A1 = a_invariants(w1);
  EXPECT_EQ(A1.dim, 2);
  EXPECT_EQ(A1.depth, 2);
  ASSERT_TRUE(A1.a[2].has_value());
  EXPECT_EQ(*A1.a[2], 0);
  for (int x = 2; x <= 5; ++x)
    EXPECT_EQ(hilbert_function(w1, Bideg{x, 0}), x - 1);

  // Second strand: the maximal ideal shifted by two.
  ModMatrix w2 = canonical_strand(S, W, 2);
  AInvariants A2 = a_invariants(w2);
  EXPECT_EQ(A2.dim, 2);
  EXPECT_EQ(A2.depth, 1);
  ASSERT_TRUE(A2.a[1].has_value());
  EXPECT_EQ(*A2.a[1], 2);
  ASSERT_TRUE(A2.a[2].has_value());
  EXPECT_EQ(*A2.a[2], 0);
}

TEST(Strand, RejectsModulesFromOtherRings) {
  BlowupInstance B = plane_at_origin();
  ReesPresentation S = rees_presentation(B);
  ModMatrix wrong = presentation_of_quotient(B.ideal);
  EXPECT_THROW(strand(S, wrong, 1), Error);
}

}  // namespace
}  // namespace reeslab
