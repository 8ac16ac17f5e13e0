#include <gtest/gtest.h>

#include "reeslab/resolution.hpp"

using namespace reeslab;

namespace {
std::map<Bideg, int> degs(const FreeResolution& r, int i) {
  std::map<Bideg, int> m;
  for (const auto& d : r.step_degs(i)) m[d]++;
  return m;
}
}  // namespace

TEST(Syzygy, ColumnsAnnihilateInput) {
  auto R = make_ring(32003, {"a", "b", "c", "d"});
  Ideal I = parse_ideal(R, {"b^2 - a*c", "b*c - a*d", "c^2 - b*d"});
  ModMatrix A = presentation_of_quotient(I);
  ModMatrix S = syzygies(A);
  EXPECT_EQ(S.nrows(), 3);
  EXPECT_GE(S.ncols(), 2);
  for (const auto& col : S.cols)
    EXPECT_TRUE(apply_matrix(A, col).empty());
  check_matrix(S);
}

TEST(Resolution, KoszulOnThreeVariables) {
  auto R = make_ring(101, {"x", "y", "z"});
  FreeResolution r = resolution_of_quotient(parse_ideal(R, {"x", "y", "z"}));
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.length(), 3);
  EXPECT_EQ(r.rank(0), 1);
  EXPECT_EQ(r.rank(1), 3);
  EXPECT_EQ(r.rank(2), 3);
  EXPECT_EQ(r.rank(3), 1);
  EXPECT_EQ(degs(r, 2), (std::map<Bideg, int>{{{2, 0}, 3}}));
  EXPECT_EQ(degs(r, 3), (std::map<Bideg, int>{{{3, 0}, 1}}));
  EXPECT_EQ(projective_dimension(r), 3);
  EXPECT_EQ(depth_via_pd(r), 0);
}

TEST(Resolution, TwistedCubicBettiAndRegularity) {
  auto R = make_ring(32003, {"a", "b", "c", "d"});
  Ideal I = parse_ideal(R, {"b^2 - a*c", "b*c - a*d", "c^2 - b*d"});
  FreeResolution r = resolution_of_quotient(I);
  BettiTable B = betti_table(r);
  EXPECT_EQ(B.pd(), 2);
  EXPECT_EQ(B.cols[0], (std::map<Bideg, int>{{{0, 0}, 1}}));
  EXPECT_EQ(B.cols[1], (std::map<Bideg, int>{{{2, 0}, 3}}));
  EXPECT_EQ(B.cols[2], (std::map<Bideg, int>{{{3, 0}, 2}}));
  EXPECT_EQ(regularity_from_betti(B), 1);
  EXPECT_EQ(depth_via_pd(r), 2);
}

TEST(Resolution, FatLineOnThreeVariables) {
  auto R = make_ring(32003, {"x0", "x1", "x2"});
  Ideal I = parse_ideal(R, {"x1^4", "x1^3*x2", "x1*x2^3", "x2^4"});
  FreeResolution r = resolution_of_quotient(I);
  BettiTable B = betti_table(r);
  EXPECT_EQ(B.pd(), 2);
  EXPECT_EQ(B.cols[1], (std::map<Bideg, int>{{{4, 0}, 4}}));
  EXPECT_EQ(B.cols[2], (std::map<Bideg, int>{{{5, 0}, 2}, {{6, 0}, 1}}));
  EXPECT_EQ(depth_via_pd(r), 1);
}

TEST(Resolution, PruningCollapsesFreeSummand) {
  auto R = make_ring(101, {"x", "y"});
  ModMatrix d1;
  d1.ring = R;
  d1.row_degs = {Bideg{0, 0}, Bideg{1, 0}};
  d1.col_degs = {Bideg{1, 0}};
  d1.cols = {column_from_entries(
      *R, {parse_poly(R, "x"), Polynomial::constant(R, 1)})};
  FreeResolution r = free_resolution(d1);
  EXPECT_EQ(r.length(), 0);
  ASSERT_EQ(r.f0.size(), 1u);
  EXPECT_EQ(r.f0[0], (Bideg{0, 0}));
}

TEST(Resolution, MinimalityNoConstantEntries) {
  auto R = make_ring(32003, {"a", "b", "c", "d"});
  // Redundant generating set: minimal resolution must still be 1,3,2.
  Ideal I = parse_ideal(R, {"b^2 - a*c", "b*c - a*d", "c^2 - b*d",
                            "a*b^2 - a^2*c", "b^2 - a*c"});
  FreeResolution r = resolution_of_quotient(I);
  EXPECT_EQ(r.rank(1), 3);
  EXPECT_EQ(r.rank(2), 2);
  for (const auto& D : r.diffs)
    for (int c = 0; c < D.ncols(); ++c)
      for (const auto& t : D.cols[c])
        EXPECT_FALSE(is_one(t.m, R->nvars()) &&
                     matrix_entry(D, t.comp, c).size() == 1);
}

TEST(Resolution, UngradedChartNeedsCapAndWorks) {
  auto R = make_chart_ring(101, {"x", "y"}, {{0, 0}, {0, 0}});
  std::vector<Polynomial> gens = {parse_poly(R, "x^2 - x"),
                                  parse_poly(R, "x*y")};
  EXPECT_THROW(free_resolution(presentation_of_quotient(Ideal(R, gens))),
               Error);
  FreeResolution r =
      free_resolution(presentation_of_quotient(Ideal(R, gens)), 4);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.length(), 2);
  EXPECT_EQ(r.rank(2), 1);
}

TEST(Resolution, ZeroIdealIsFree) {
  auto R = make_ring(101, {"x"});
  FreeResolution r = resolution_of_quotient(Ideal(R, {}));
  EXPECT_EQ(r.length(), 0);
  EXPECT_EQ(projective_dimension(r), 0);
  EXPECT_EQ(depth_via_pd(r), 1);
}

TEST(Matrix, DualReflectsDegreesAndTransposes) {
  auto R = make_ring(101, {"x", "y", "T"}, {{1, 0}, {1, 0}, {0, 1}});
  ModMatrix A;
  A.ring = R;
  A.row_degs = {Bideg{0, 0}, Bideg{1, 1}};
  A.col_degs = {Bideg{2, 1}};
  A.cols = {column_from_entries(
      *R, {parse_poly(R, "x^2*T"), parse_poly(R, "y")})};
  check_matrix(A);
  Bideg sigma = R->sigma();  // (2,1)
  ModMatrix D = dual_matrix(A, sigma);
  EXPECT_EQ(D.nrows(), 1);
  EXPECT_EQ(D.ncols(), 2);
  EXPECT_EQ(D.row_degs[0], (Bideg{0, 0}));   // sigma - (2,1)
  EXPECT_EQ(D.col_degs[0], (Bideg{2, 1}));   // sigma - 0
  EXPECT_EQ(D.col_degs[1], (Bideg{1, 0}));   // sigma - (1,1)
  check_matrix(D);
  // Double dual restores the original matrix.
  ModMatrix DD = dual_matrix(D, sigma);
  EXPECT_EQ(DD.row_degs, A.row_degs);
  EXPECT_EQ(DD.col_degs, A.col_degs);
  EXPECT_EQ(DD.cols, A.cols);
}
