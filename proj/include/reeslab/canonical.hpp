#pragma once

#include <map>
#include <utility>
#include <vector>

#include "reeslab/rees.hpp"

namespace reeslab {

namespace detail {

inline void window_monomials_rec(int lo, int cnt, int i, int left, Expo& cur,
                                 std::vector<Expo>& out) {
  if (i == cnt - 1) {
    cur.e[size_t(lo + i)] = int16_t(left);
    out.push_back(cur);
    cur.e[size_t(lo + i)] = 0;
    return;
  }
  for (int k = left; k >= 0; --k) {
    cur.e[size_t(lo + i)] = int16_t(k);
    window_monomials_rec(lo, cnt, i + 1, left - k, cur, out);
  }
  cur.e[size_t(lo + i)] = 0;
}

// Monomials of total degree k in the contiguous variable window
// [lo, lo + cnt), written as full-width exponent vectors.
inline std::vector<Expo> window_monomials(int lo, int cnt, int k) {
  std::vector<Expo> out;
  if (k < 0) return out;
  Expo cur;
  if (cnt == 0) {
    if (k == 0) out.push_back(cur);
    return out;
  }
  window_monomials_rec(lo, cnt, 0, k, cur, out);
  return out;
}

}  // namespace detail

// One t-graded piece of a module over the blow-up ambient ring, presented
// over the base ambient ring. Generators are pairs (module generator, fiber
// monomial filling the t-degree up to n); relation columns arise from the
// module relations multiplied through by fiber monomials.
inline ModMatrix strand(const ReesPresentation& S, const ModMatrix& M,
                        int n) {
  const RingPtr& P = S.ambient;
  if (M.ring.get() != P.get())
    throw Error("strand: the module lives in a different ring");
  const RingPtr& R = S.blowup.ambient;
  const int nb = S.base_vars;
  const int nf = S.fiber_vars;

  ModMatrix out;
  out.ring = R;
  std::map<std::pair<int, std::array<int16_t, kMaxVars>>, int> row_of;
  for (int r = 0; r < M.nrows(); ++r) {
    const Bideg& rd = M.row_degs[size_t(r)];
    for (const auto& mu : detail::window_monomials(nb, nf, n - rd.t)) {
      row_of[{r, mu.e}] = int(out.row_degs.size());
      out.row_degs.push_back(Bideg{rd.x + P->mono_bideg(mu).x, 0});
    }
  }
  if (out.row_degs.empty()) return out;

  for (int k = 0; k < M.ncols(); ++k) {
    const Bideg& cd = M.col_degs[size_t(k)];
    for (const auto& nu : detail::window_monomials(nb, nf, n - cd.t)) {
      MPoly col;
      for (const auto& t : M.cols[size_t(k)]) {
        Expo base, fiber;
        for (int i = 0; i < nb; ++i) base.e[size_t(i)] = t.m.e[size_t(i)];
        for (int i = nb; i < nb + nf; ++i)
          fiber.e[size_t(i)] = int16_t(t.m.e[size_t(i)] + nu.e[size_t(i)]);
        auto it = row_of.find({t.comp, fiber.e});
        if (it == row_of.end())
          throw Error("strand: relation term escapes the graded piece");
        col.push_back(make_term(*R, base, it->second, t.c));
      }
      if (col.empty()) continue;
      mpoly_normalize(*R, col);
      out.cols.push_back(std::move(col));
      out.col_degs.push_back(Bideg{cd.x + P->mono_bideg(nu).x, 0});
    }
  }
  check_matrix(out);
  return minimal_presentation(std::move(out));
}

// Strand of the algebra itself: the t-degree-n piece of the blow-up algebra
// as a module over the base.
inline ModMatrix algebra_strand(const ReesPresentation& S, int n) {
  return strand(S, presentation_of_quotient(S.ideal), n);
}

// Strand of the canonical module.
inline ModMatrix canonical_strand(const ReesPresentation& S,
                                  const CanonicalModule& W, int n) {
  return strand(S, W.pres, n);
}

}  // namespace reeslab
