#pragma once

#include <map>
#include <utility>
#include <vector>

#include "reeslab/module.hpp"
#include "reeslab/syzygy.hpp"

namespace reeslab {

// A chain of free modules F_0 <- F_1 <- ... <- F_L with differentials
// diffs[k] : F_{k+1} -> F_k (so diffs[0] presents the module). For graded
// rings the chain is pruned to the minimal resolution; ungraded chains are
// pruned of literal constant entries only.
struct FreeResolution {
  RingPtr ring;
  std::vector<Bideg> f0;          // generator degrees of F_0
  std::vector<ModMatrix> diffs;   // d_1 .. d_L
  bool complete = true;

  int length() const {
    int L = 0;
    for (size_t k = 0; k < diffs.size(); ++k)
      if (diffs[k].ncols() > 0) L = int(k) + 1;
    return L;
  }
  const std::vector<Bideg>& step_degs(int i) const {
    if (i == 0) return f0;
    return diffs[size_t(i) - 1].col_degs;
  }
  int rank(int i) const {
    if (i == 0) return int(f0.size());
    if (i > int(diffs.size())) return 0;
    return diffs[size_t(i) - 1].ncols();
  }
};

namespace detail {

inline MPoly col_mul_poly(const PolyRing& R, const MPoly& col, const MPoly& q) {
  const int nv = R.nvars();
  MPoly acc;
  acc.reserve(col.size() * q.size());
  for (const auto& t : q)
    for (const auto& s : col) {
      MTerm o = s;
      o.m = mono_mul(s.m, t.m, nv);
      o.deg = s.deg + t.deg;
      o.c = R.field().mul(s.c, t.c);
      acc.push_back(o);
    }
  mpoly_normalize(R, acc);
  return acc;
}

// Remove component r from every column (entries there must already be zero)
// and renumber higher components down.
inline void drop_row(ModMatrix& M, int r) {
  for (auto& col : M.cols) {
    for (const auto& t : col)
      if (t.comp == r) throw Error("resolution pruning: dropped row not clear");
    for (auto& t : col)
      if (t.comp > r) t.comp--;
  }
  M.row_degs.erase(M.row_degs.begin() + r);
}

inline void drop_col(ModMatrix& M, int c) {
  M.cols.erase(M.cols.begin() + c);
  M.col_degs.erase(M.col_degs.begin() + c);
}

// Find a literal constant entry in diffs[k]; returns {r, c, coef} or r = -1.
struct UnitHit {
  int r = -1, c = -1;
  int64_t coef = 0;
};

inline UnitHit find_unit(const ModMatrix& M, int nv) {
  for (int c = 0; c < M.ncols(); ++c) {
    std::map<int, int> terms_in_row;
    for (const auto& t : M.cols[c]) terms_in_row[t.comp]++;
    for (const auto& t : M.cols[c])
      if (is_one(t.m, nv) && terms_in_row[t.comp] == 1)
        return {int(t.comp), c, t.c};
  }
  return {};
}

// Split off the trivial summand exposed by the constant entry (r,c) of
// diffs[k], adjusting the neighbouring differentials.
inline void prune_at(std::vector<ModMatrix>& diffs, std::vector<Bideg>& f0,
                     size_t k, int r, int c, int64_t coef) {
  ModMatrix& D = diffs[k];
  const PolyRing& R = *D.ring;
  int64_t inv = R.field().inv(coef);

  // Clear row r from the other columns; mirror as row operations one level up.
  for (int c2 = 0; c2 < D.ncols(); ++c2) {
    if (c2 == c) continue;
    MPoly g = matrix_entry(D, r, c2);
    if (g.empty()) continue;
    MPoly q = g;
    mpoly_scale(R, q, inv);
    MPoly delta = col_mul_poly(R, D.cols[c], q);
    for (auto& t : delta) t.c = R.field().neg(t.c);
    D.cols[c2] = mpoly_add(R, D.cols[c2], delta);
    if (k + 1 < diffs.size()) {
      ModMatrix& E = diffs[k + 1];
      for (auto& col : E.cols) {
        MPoly ec2 = MPoly();
        for (const auto& t : col)
          if (t.comp == c2) {
            MTerm s = t;
            s.comp = int32_t(c);
            ec2.push_back(s);
          }
        if (ec2.empty()) continue;
        MPoly add = col_mul_poly(R, ec2, q);
        col = mpoly_add(R, col, add);
      }
    }
  }

  // The split-off summand must now be invisible one level up.
  if (k + 1 < diffs.size())
    for (const auto& col : diffs[k + 1].cols)
      for (const auto& t : col)
        if (t.comp == c)
          throw Error("resolution pruning: residual entry above a unit");

  // One level down, the column of the dropped generator is determined by
  // the unit column; verify and remove it.
  MPoly colc = D.cols[c];
  if (k > 0) {
    ModMatrix& B = diffs[k - 1];
    MPoly acc;
    for (const auto& t : colc) {
      MPoly part = col_mul_poly(R, B.cols[t.comp], MPoly{MTerm{t.m, 0, t.c, t.deg}});
      acc = mpoly_add(R, acc, part);
    }
    if (!acc.empty())
      throw Error("resolution pruning: complex property lost below a unit");
    drop_col(B, r);
  } else {
    f0.erase(f0.begin() + r);
  }

  drop_col(D, c);
  drop_row(D, r);
  if (k + 1 < diffs.size()) drop_row(diffs[k + 1], c);
}

}  // namespace detail

// Resolve the cokernel of d1 by iterated syzygies, pruning constant entries
// as they appear. Graded rings run to completion (minimal resolution);
// ungraded rings require an explicit step cap.
inline FreeResolution free_resolution(const ModMatrix& d1, int max_steps = -1) {
  check_matrix(d1);
  const RingPtr& ring = d1.ring;
  if (!ring->graded() && max_steps < 0)
    throw Error("free_resolution over an ungraded ring needs a step cap");
  int cap = max_steps >= 0 ? max_steps : ring->nvars() + 3;

  FreeResolution res;
  res.ring = ring;
  res.f0 = d1.row_degs;
  res.diffs.push_back(d1);

  auto prune_all = [&]() {
    bool again = true;
    while (again) {
      again = false;
      for (size_t k = 0; k < res.diffs.size(); ++k) {
        detail::UnitHit u = detail::find_unit(res.diffs[k], ring->nvars());
        if (u.r >= 0) {
          detail::prune_at(res.diffs, res.f0, k, u.r, u.c, u.coef);
          again = true;
          break;
        }
      }
    }
  };

  prune_all();
  while (true) {
    if (res.diffs.back().ncols() == 0) break;
    if (int(res.diffs.size()) >= cap) {
      ModMatrix S = syzygies(res.diffs.back());
      if (!S.is_zero()) {
        if (ring->graded() && max_steps < 0)
          throw Error("graded resolution exceeded the syzygy bound");
        res.complete = false;
      }
      break;
    }
    ModMatrix S = syzygies(res.diffs.back());
    if (S.is_zero()) break;
    res.diffs.push_back(std::move(S));
    prune_all();
  }

  // Drop trailing zero differentials and verify the complex property.
  while (!res.diffs.empty() && res.diffs.back().ncols() == 0 &&
         res.diffs.size() > 1)
    res.diffs.pop_back();
  for (size_t k = 1; k < res.diffs.size(); ++k) {
    if (res.diffs[k].ncols() == 0) continue;
    if (!matrix_compose(res.diffs[k - 1], res.diffs[k]).is_zero())
      throw Error("resolution differentials do not compose to zero");
  }
  for (size_t k = 1; k < res.diffs.size(); ++k)
    if (res.diffs[k].row_degs != res.diffs[k - 1].col_degs)
      throw Error("resolution degree bookkeeping mismatch");
  return res;
}

inline FreeResolution resolution_of_quotient(const Ideal& I,
                                             int max_steps = -1) {
  return free_resolution(presentation_of_quotient(I), max_steps);
}

// Prune constant entries from a single presentation matrix (graded case:
// the result is the minimal presentation). Zero columns are dropped.
inline ModMatrix minimal_presentation(ModMatrix M) {
  check_matrix(M);
  std::vector<ModMatrix> diffs{std::move(M)};
  std::vector<Bideg> f0 = diffs[0].row_degs;
  while (true) {
    detail::UnitHit u = detail::find_unit(diffs[0], diffs[0].ring->nvars());
    if (u.r < 0) break;
    detail::prune_at(diffs, f0, 0, u.r, u.c, u.coef);
  }
  ModMatrix out = std::move(diffs[0]);
  for (int c = out.ncols() - 1; c >= 0; --c)
    if (out.cols[size_t(c)].empty()) detail::drop_col(out, c);
  return out;
}

inline int projective_dimension(const FreeResolution& res) {
  if (!res.complete)
    throw Error("projective dimension of an incomplete resolution");
  return res.length();
}

// Auslander-Buchsbaum: depth = nvars - pd for modules over the polynomial
// ring (graded case).
inline int depth_via_pd(const FreeResolution& res) {
  return res.ring->nvars() - projective_dimension(res);
}

// Graded Betti numbers: betti[i][degree] = rank contribution of F_i.
struct BettiTable {
  std::vector<std::map<Bideg, int>> cols;
  int pd() const { return int(cols.size()) - 1; }
  int total_rank(int i) const {
    int s = 0;
    for (const auto& [d, m] : cols[i]) s += m;
    return s;
  }
};

inline BettiTable betti_table(const FreeResolution& res) {
  if (!res.ring->graded())
    throw Error("Betti table requires a graded resolution");
  BettiTable B;
  B.cols.resize(size_t(res.length()) + 1);
  for (const auto& d : res.f0) B.cols[0][d]++;
  for (int i = 1; i <= res.length(); ++i)
    for (const auto& d : res.diffs[size_t(i) - 1].col_degs) B.cols[i][d]++;
  return B;
}

// Castelnuovo-Mumford regularity in the first grading component from the
// minimal Betti data: max over i of (x-degree - i).
inline int regularity_from_betti(const BettiTable& B) {
  int r = INT32_MIN;
  for (size_t i = 0; i < B.cols.size(); ++i)
    for (const auto& [d, m] : B.cols[i]) r = std::max(r, d.x - int(i));
  return r;
}

}  // namespace reeslab
