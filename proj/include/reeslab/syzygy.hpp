#pragma once

#include <map>
#include <utility>
#include <vector>

#include "reeslab/module.hpp"

namespace reeslab {

// Generating set of the syzygy module of the columns of A: all vectors w
// with sum_j w_j A_j = 0, as a matrix whose rows match A's columns.
//
// Method: tagged basis computation (basis h_k = sum_j U_kj a_j), Schreyer's
// construction for the syzygies of the basis (pairs whose lead quotient is
// divisibility-minimal per basis element), then conversion back through U
// and the division certificates V (a_j = sum_k V_jk h_k):
//   Syz(A) = { w U : w in Syz(H) }  +  rows of (I - V U).
inline ModMatrix syzygies(const ModMatrix& A) {
  const RingPtr& ring = A.ring;
  const PolyRing& R = *ring;
  const int nv = R.nvars();

  ModMatrix S;
  S.ring = ring;
  S.row_degs = A.col_degs;
  if (A.ncols() == 0) return S;

  std::vector<int> shifts;
  for (const auto& d : A.row_degs) shifts.push_back(d.total());

  ModGBOptions opt;
  opt.want_tags = true;
  ModGBResult gb = module_groebner(ring, A.cols, A.nrows(), shifts, opt);
  const auto& H = gb.basis;
  const auto& U = gb.tags;

  // Division certificates for the input columns.
  std::vector<MPoly> V(A.ncols());
  for (int j = 0; j < A.ncols(); ++j) {
    MPoly rem = module_normal_form(R, A.cols[j], H, &V[j]);
    if (!rem.empty())
      throw Error("syzygies: input column failed to reduce against its basis");
  }

  std::vector<MPoly> out;

  // Schreyer pairs: for each i, the minimal lead quotients among
  // lcm(lm_i, lm_j)/lm_i over j > i with matching component.
  for (size_t i = 0; i < H.size(); ++i) {
    const MTerm& li = H[i].front();
    std::vector<std::pair<Expo, size_t>> quots;
    for (size_t j = i + 1; j < H.size(); ++j) {
      const MTerm& lj = H[j].front();
      if (lj.comp != li.comp) continue;
      Expo lcm = mono_lcm(li.m, lj.m, nv);
      quots.push_back({mono_div(lcm, li.m, nv), j});
    }
    // Divisibility-minimal quotients; smallest partner on ties.
    std::vector<std::pair<Expo, size_t>> minimal;
    for (const auto& q : quots) {
      bool dominated = false;
      for (const auto& m : minimal)
        if (divides(m.first, q.first, nv)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      std::vector<std::pair<Expo, size_t>> next;
      for (const auto& m : minimal)
        if (!divides(q.first, m.first, nv)) next.push_back(m);
      next.push_back(q);  // strict domination was excluded above
      minimal = std::move(next);
    }
    for (const auto& [ui, j] : minimal) {
      const MTerm& lj = H[j].front();
      Expo lcm = mono_mul(li.m, ui, nv);
      Expo uj = mono_div(lcm, lj.m, nv);
      int dui = total_degree(ui, nv), duj = total_degree(uj, nv);
      MPoly s = mpoly_mul_mono(R, H[i], 1, ui, dui);
      mpoly_sub_mul(R, s, 1, uj, duj, H[j]);
      MPoly q;
      MPoly rem = module_normal_form(R, std::move(s), H, &q);
      if (!rem.empty()) throw Error("syzygies: s-vector failed to reduce");
      // Syzygy of H: ui e_i - uj e_j - q, then push through U.
      MPoly w;
      {
        MTerm a;
        a.m = ui;
        a.comp = int32_t(i);
        a.c = 1;
        a.deg = dui;
        w.push_back(a);
        MTerm b;
        b.m = uj;
        b.comp = int32_t(j);
        b.c = R.field().neg(1);
        b.deg = duj;
        w.push_back(b);
        for (const auto& t : q) {
          MTerm s2 = t;
          s2.c = R.field().neg(t.c);
          w.push_back(s2);
        }
        mpoly_normalize(R, w);
      }
      MPoly syz = apply_columns(R, w, U);
      if (!syz.empty()) out.push_back(std::move(syz));
    }
  }

  // Rows of I - V U.
  for (int j = 0; j < A.ncols(); ++j) {
    MPoly row;
    MTerm e;
    e.comp = int32_t(j);
    e.c = 1;
    row.push_back(e);
    MPoly vu = apply_columns(R, V[j], U);
    for (auto& t : vu) t.c = R.field().neg(t.c);
    row = mpoly_add(R, row, vu);
    if (!row.empty()) out.push_back(std::move(row));
  }

  // Deduplicate identical columns, drop zeros, fix degrees.
  std::vector<MPoly> dedup;
  for (auto& w : out) {
    bool seen = false;
    for (const auto& d : dedup)
      if (d == w) {
        seen = true;
        break;
      }
    if (!seen) dedup.push_back(std::move(w));
  }
  for (auto& w : dedup) {
    if (ring->graded())
      S.col_degs.push_back(vector_bideg(R, S.row_degs, w));
    else
      S.col_degs.push_back(Bideg{0, 0});
    S.cols.push_back(std::move(w));
  }
  return S;
}

}  // namespace reeslab
