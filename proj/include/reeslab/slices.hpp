#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "reeslab/buchberger.hpp"
#include "reeslab/ideal.hpp"
#include "reeslab/ideal_ops.hpp"

namespace reeslab {

namespace detail {

// Reduced row echelon form over F_p, in place; zero rows are removed. The
// output is the canonical basis of the row space for the given column order.
inline void rref(const Fp& F, std::vector<std::vector<int64_t>>& rows) {
  if (rows.empty()) return;
  const size_t ncols = rows[0].size();
  size_t lead = 0;
  for (size_t col = 0; col < ncols && lead < rows.size(); ++col) {
    size_t piv = lead;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[lead], rows[piv]);
    int64_t inv = F.inv(rows[lead][col]);
    for (size_t j = col; j < ncols; ++j)
      rows[lead][j] = F.mul(rows[lead][j], inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      int64_t c = rows[r][col];
      for (size_t j = col; j < ncols; ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[lead][j]));
    }
    ++lead;
  }
  rows.resize(lead);
}

inline void degree_monomials_rec(int nv, int i, int left, Expo& cur,
                                 std::vector<Expo>& out) {
  if (i == nv - 1) {
    cur.e[size_t(i)] = int16_t(left);
    out.push_back(cur);
    cur.e[size_t(i)] = 0;
    return;
  }
  for (int k = left; k >= 0; --k) {
    cur.e[size_t(i)] = int16_t(k);
    degree_monomials_rec(nv, i + 1, left - k, cur, out);
  }
  cur.e[size_t(i)] = 0;
}

inline void require_standard_base(const PolyRing& R) {
  if (!R.graded()) throw Error("slice: the ambient ring must be graded");
  for (int i = 0; i < R.nvars(); ++i)
    if (R.var_bideg(i) != Bideg{1, 0})
      throw Error("slice: every ambient variable must have degree one");
}

}  // namespace detail

// All monomials of total degree c in a ring whose variables all have degree
// (1,0). Deterministic order; callers re-sort as needed.
inline std::vector<Expo> monomials_of_degree(const RingPtr& R, int c) {
  detail::require_standard_base(*R);
  std::vector<Expo> out;
  if (c < 0) return out;
  Expo cur;
  if (R->nvars() == 0) {
    if (c == 0) out.push_back(cur);
    return out;
  }
  detail::degree_monomials_rec(R->nvars(), 0, c, cur, out);
  return out;
}

// A canonical k-basis of one graded piece of an ideal power, optionally
// inside a quotient of the ambient ring. Representatives are fully reduced
// against the relations and row-reduced, so equal subspaces yield identical
// bases.
struct SliceBasis {
  RingPtr ring;
  int power = 1;
  int degree = 0;
  std::vector<Polynomial> basis;

  int dim() const { return int(basis.size()); }
};

// Basis of the degree-c piece of (the image of) I^e in R/rels (rels may be
// null for a free ambient ring).
inline SliceBasis ideal_slice(const Ideal& I, int e, int c,
                              const Ideal* rels = nullptr) {
  const RingPtr& R = I.ring();
  detail::require_standard_base(*R);
  if (rels && rels->ring().get() != R.get())
    throw Error("slice: relations live in a different ring");
  if (e < 1) throw Error("slice: the power must be positive");
  SliceBasis out;
  out.ring = R;
  out.power = e;
  out.degree = c;
  if (c < 0) return out;

  std::vector<Polynomial> mingens =
      minimal_generators(I, rels && !rels->gens().empty() ? rels : nullptr);
  if (mingens.empty()) return out;
  Ideal P = ideal_power(Ideal(R, std::move(mingens)), e);

  const bool reduce = rels && !rels->gens().empty();
  std::vector<Expo> monos = monomials_of_degree(R, c);
  if (reduce) {
    const auto& gb = groebner_basis(*rels).basis;
    std::vector<Expo> keep;
    for (const auto& m : monos) {
      bool standard = true;
      for (const auto& g : gb)
        if (divides(g.lead().m, m, R->nvars())) {
          standard = false;
          break;
        }
      if (standard) keep.push_back(m);
    }
    monos = std::move(keep);
  }
  auto greater = [&](const Expo& a, const Expo& b) {
    return term_cmp(*R, make_term(*R, a, 0, 1), make_term(*R, b, 0, 1)) > 0;
  };
  std::sort(monos.begin(), monos.end(), greater);
  auto col_of = [&](const Expo& m) {
    auto it = std::lower_bound(monos.begin(), monos.end(), m, greater);
    if (it == monos.end() || !(m == *it))
      throw Error("slice: term outside the standard monomial basis");
    return size_t(it - monos.begin());
  };
  if (monos.empty()) return out;

  const Fp& F = R->field();
  std::vector<std::vector<int64_t>> rows;
  for (const auto& g : P.gens()) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw Error("slice: the ideal must be homogeneous");
    int d = g.bideg()->x;
    if (d > c) continue;
    for (const auto& mu : monomials_of_degree(R, c - d)) {
      Polynomial h =
          poly_mul(Polynomial(R, MPoly{make_term(*R, mu, 0, 1)}), g);
      if (reduce) h = normal_form(h, *rels);
      if (h.is_zero()) continue;
      std::vector<int64_t> row(monos.size(), 0);
      for (const auto& t : h.terms()) row[col_of(t.m)] = t.c;
      rows.push_back(std::move(row));
    }
  }
  detail::rref(F, rows);

  for (const auto& row : rows) {
    MPoly terms;
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) terms.push_back(make_term(*R, monos[j], 0, row[j]));
    mpoly_normalize(*R, terms);
    out.basis.emplace_back(R, std::move(terms));
  }
  return out;
}

inline int slice_dim(const Ideal& I, int e, int c,
                     const Ideal* rels = nullptr) {
  return ideal_slice(I, e, c, rels).dim();
}

// Generators of the truncated ideal spanned by one graded piece of I^e.
struct TruncationGenerators {
  Ideal ideal;                          // generated by the degree-c slice
  int max_gen_degree = 0;               // of the untruncated ideal I
  bool below_generation_degree = false;  // c < e * max_gen_degree
};

inline TruncationGenerators truncation_generators(const Ideal& I, int e,
                                                  int c,
                                                  const Ideal* rels = nullptr) {
  if (e < 1) throw Error("truncation: the power must be positive");
  SliceBasis s = ideal_slice(I, e, c, rels);
  TruncationGenerators out{Ideal(I.ring(), s.basis),
                           max_gen_degree(I, rels), false};
  out.below_generation_degree = c < e * out.max_gen_degree;
  return out;
}

}  // namespace reeslab
