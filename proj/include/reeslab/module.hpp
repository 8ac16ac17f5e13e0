#pragma once

#include <utility>
#include <vector>

#include "reeslab/buchberger.hpp"
#include "reeslab/polynomial.hpp"

namespace reeslab {

// A matrix over the ring, stored column-major as module vectors. Columns
// live in the free module with the given row degrees; col_degs records the
// degree of each column for graded bookkeeping. Entry (r,c) is the
// coefficient polynomial of component r in cols[c].
struct ModMatrix {
  RingPtr ring;
  std::vector<Bideg> row_degs;
  std::vector<Bideg> col_degs;
  std::vector<MPoly> cols;

  int nrows() const { return int(row_degs.size()); }
  int ncols() const { return int(cols.size()); }
  bool is_zero() const {
    for (const auto& c : cols)
      if (!c.empty()) return false;
    return true;
  }
};

// sum_k w_k * M[k], where the components of w index the list M. All the
// partial products are collected first and merged in one normalization pass.
inline MPoly apply_columns(const PolyRing& R, const MPoly& w,
                           const std::vector<MPoly>& M) {
  const int nv = R.nvars();
  size_t total = 0;
  for (const auto& t : w) {
    if (t.comp < 0 || t.comp >= int(M.size()))
      throw Error("apply_columns: component out of range");
    total += M[size_t(t.comp)].size();
  }
  MPoly acc;
  acc.reserve(total);
  for (const auto& t : w)
    for (const auto& s : M[size_t(t.comp)]) {
      MTerm o = s;
      o.m = mono_mul(s.m, t.m, nv);
      o.deg = s.deg + t.deg;
      o.c = R.field().mul(s.c, t.c);
      acc.push_back(o);
    }
  mpoly_normalize(R, acc);
  return acc;
}

inline MPoly apply_matrix(const ModMatrix& A, const MPoly& v) {
  return apply_columns(*A.ring, v, A.cols);
}

// A after B (columns of B are re-expressed through A).
inline ModMatrix matrix_compose(const ModMatrix& A, const ModMatrix& B) {
  if (A.ring.get() != B.ring.get())
    throw Error("matrix composition across different rings");
  if (A.ncols() != B.nrows())
    throw Error("matrix composition shape mismatch");
  ModMatrix C;
  C.ring = A.ring;
  C.row_degs = A.row_degs;
  C.col_degs = B.col_degs;
  for (const auto& b : B.cols) C.cols.push_back(apply_matrix(A, b));
  return C;
}

// Degree of a homogeneous module vector in the free module with the given
// row degrees; throws when the vector is inhomogeneous and the ring graded.
inline Bideg vector_bideg(const PolyRing& R, const std::vector<Bideg>& row_degs,
                          const MPoly& v) {
  if (v.empty()) throw Error("degree of the zero vector");
  Bideg d = row_degs[v.front().comp] + R.mono_bideg(v.front().m);
  if (R.graded())
    for (const auto& t : v)
      if (row_degs[t.comp] + R.mono_bideg(t.m) != d)
        throw Error("inhomogeneous module vector");
  return d;
}

inline bool matrix_is_homogeneous(const ModMatrix& A) {
  if (!A.ring->graded()) return false;
  for (int c = 0; c < A.ncols(); ++c) {
    for (const auto& t : A.cols[c])
      if (A.row_degs[t.comp] + A.ring->mono_bideg(t.m) != A.col_degs[c])
        return false;
  }
  return true;
}

// Throws when a graded matrix has a column violating its declared degree.
inline void check_matrix(const ModMatrix& A) {
  if (int(A.col_degs.size()) != A.ncols())
    throw Error("matrix column degree bookkeeping is off");
  for (const auto& col : A.cols)
    for (const auto& t : col)
      if (t.comp < 0 || t.comp >= A.nrows())
        throw Error("matrix entry outside row range");
  if (A.ring->graded() && !matrix_is_homogeneous(A))
    throw Error("matrix is not homogeneous");
}

// Entry (r,c) as a ring element (component stripped).
inline MPoly matrix_entry(const ModMatrix& A, int r, int c) {
  MPoly out;
  for (const auto& t : A.cols[c])
    if (t.comp == r) {
      MTerm s = t;
      s.comp = 0;
      out.push_back(s);
    }
  return out;
}

// Build a matrix column from ring-level polynomials (one per row).
inline MPoly column_from_entries(const PolyRing& R,
                                 const std::vector<Polynomial>& entries) {
  MPoly col;
  for (size_t r = 0; r < entries.size(); ++r)
    for (const auto& t : entries[r].terms()) {
      MTerm s = t;
      s.comp = int32_t(r);
      col.push_back(s);
    }
  mpoly_normalize(R, col);
  return col;
}

// Dual with respect to Hom(-, P(-sigma)): transpose entries, reflect
// degrees through sigma.
inline ModMatrix dual_matrix(const ModMatrix& D, const Bideg& sigma) {
  ModMatrix T;
  T.ring = D.ring;
  for (const auto& cd : D.col_degs) T.row_degs.push_back(sigma - cd);
  for (const auto& rd : D.row_degs) T.col_degs.push_back(sigma - rd);
  T.cols.assign(D.nrows(), MPoly{});
  for (int c = 0; c < D.ncols(); ++c)
    for (const auto& t : D.cols[c]) {
      MTerm s = t;
      s.comp = int32_t(c);
      T.cols[t.comp].push_back(s);
    }
  for (auto& col : T.cols) mpoly_normalize(*T.ring, col);
  return T;
}

// Presentation matrix of P^k / image for an ideal: one row of degree zero,
// columns the generators.
inline ModMatrix presentation_of_quotient(const Ideal& I) {
  ModMatrix A;
  A.ring = I.ring();
  A.row_degs = {Bideg{0, 0}};
  for (const auto& g : I.gens()) {
    A.cols.push_back(g.terms());
    if (A.ring->graded()) {
      auto d = g.bideg();
      if (!d) throw Error("inhomogeneous ideal generator in graded ring");
      A.col_degs.push_back(*d);
    } else {
      A.col_degs.push_back(Bideg{0, 0});
    }
  }
  return A;
}

}  // namespace reeslab
