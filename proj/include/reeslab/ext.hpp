#pragma once
// Ext modules against the ring, computed from a free resolution: dualize the
// complex, present ker/im at each spot. Vanishing is decided by an exact
// membership test (kernel generators reduce to zero against the image), so it
// is reliable even when the resolution is not minimal.

#include <utility>
#include <vector>

#include "buchberger.hpp"
#include "module.hpp"
#include "resolution.hpp"
#include "syzygy.hpp"

namespace reeslab {

// Ext of M against the rank-one free module generated in degree `twist`.
// `pres.row_degs`, when the ring is graded, are the generator degrees of the
// minimal presentation; in particular they are the degrees in which Ext is
// generated.
struct ExtModule {
  bool zero = true;
  ModMatrix pres;  // minimal presentation (rows = generators)

  const std::vector<Bideg>& gen_degs() const { return pres.row_degs; }
};

namespace detail {

inline std::vector<int> total_shifts(const std::vector<Bideg>& degs) {
  std::vector<int> s;
  s.reserve(degs.size());
  for (const auto& d : degs) s.push_back(d.total());
  return s;
}

}  // namespace detail

// Ext^i(M, P(-twist)) where M is the cokernel of the matrix resolved by
// `res`. A truncated resolution supports i up to its last computed step
// minus one; a complete one supports every i (higher indices vanish).
inline ExtModule ext_module(const FreeResolution& res, int i,
                            const Bideg& twist, bool want_presentation = true) {
  if (i < 0) throw Error("ext_module: negative cohomological index");
  const RingPtr& ring = res.ring;
  const PolyRing& R = *ring;

  ExtModule out;
  out.pres.ring = ring;

  const int ndiffs = int(res.diffs.size());
  if (i > ndiffs || (i == ndiffs && !res.complete)) {
    if (!res.complete)
      throw Error("ext_module: resolution truncated below requested index");
    return out;  // F_i = 0
  }

  // Degrees of the dual generators of F_i^*.
  std::vector<Bideg> dual_degs;
  for (const auto& d : res.step_degs(i)) dual_degs.push_back(twist - d);

  // Kernel of the dualized next differential, as columns over F_i^*.
  ModMatrix K;
  if (i < ndiffs) {
    ModMatrix B = dual_matrix(res.diffs[size_t(i)], twist);
    K = syzygies(B);
  } else {
    // No next differential: the kernel is all of F_i^*.
    K.ring = ring;
    K.row_degs = dual_degs;
    for (int j = 0; j < int(dual_degs.size()); ++j) {
      K.cols.push_back(MPoly{make_term(R, Expo{}, j, 1)});
      K.col_degs.push_back(dual_degs[j]);
    }
  }

  if (K.ncols() == 0) return out;  // kernel is zero

  if (i == 0) {
    out.zero = false;
  } else {
    ModMatrix A = dual_matrix(res.diffs[size_t(i) - 1], twist);
    ModGBResult img = module_groebner(ring, A.cols, A.nrows(),
                                      detail::total_shifts(A.row_degs));
    out.zero = true;
    for (const auto& col : K.cols)
      if (!module_normal_form(R, col, img.basis).empty()) {
        out.zero = false;
        break;
      }
  }
  if (out.zero || !want_presentation) return out;

  // Relations on the kernel generators: the image columns rewritten in terms
  // of the kernel generators, plus the syzygies among the kernel generators.
  ModGBOptions tagged;
  tagged.want_tags = true;
  ModGBResult gbk = module_groebner(ring, K.cols, K.nrows(),
                                    detail::total_shifts(K.row_degs), tagged);

  ModMatrix rel;
  rel.ring = ring;
  rel.row_degs = K.col_degs;
  if (i >= 1) {
    ModMatrix A = dual_matrix(res.diffs[size_t(i) - 1], twist);
    for (const auto& a : A.cols) {
      if (a.empty()) continue;
      MPoly q;
      MPoly rem = module_normal_form(R, a, gbk.basis, &q);
      if (!rem.empty())
        throw Error("ext_module: image column escapes the kernel");
      MPoly lift = apply_columns(R, q, gbk.tags);
      if (lift.empty()) continue;
      rel.col_degs.push_back(vector_bideg(R, rel.row_degs, lift));
      rel.cols.push_back(std::move(lift));
    }
  }
  ModMatrix SK = syzygies(K);
  for (int c = 0; c < SK.ncols(); ++c) {
    rel.cols.push_back(SK.cols[size_t(c)]);
    rel.col_degs.push_back(SK.col_degs[size_t(c)]);
  }

  out.pres = minimal_presentation(std::move(rel));
  if (out.pres.nrows() == 0)
    throw Error("ext_module: nonzero module pruned to nothing");
  return out;
}

inline ExtModule ext_of_quotient(const Ideal& I, int i, const Bideg& twist,
                                 bool want_presentation = true,
                                 int max_steps = -1) {
  FreeResolution res = free_resolution(presentation_of_quotient(I), max_steps);
  return ext_module(res, i, twist, want_presentation);
}

}  // namespace reeslab
