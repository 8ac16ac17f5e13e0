#pragma once
// Degree data of Ext^j(M, P(-sigma)) for all j, and the invariants read off
// from it: depth and dimension (by which Ext vanish), a-invariants in either
// grading component, regularity, and Cohen-Macaulay tests. Independent
// routes (Betti table, Hilbert series, Auslander-Buchsbaum) are cross-checked
// and any disagreement is a hard error, never silently reconciled.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cm_certificate.hpp"
#include "ext.hpp"
#include "hilbert.hpp"
#include "ideal.hpp"
#include "resolution.hpp"

namespace reeslab {

struct ExtDegreeSummary {
  bool nonzero = false;
  std::vector<Bideg> gens;  // minimal generator degrees when nonzero
};

// Ext^j(M, P(-sigma)) for j = 0..nvars against the dualizing twist.
struct DualityProfile {
  Bideg sigma;
  std::vector<ExtDegreeSummary> ext;

  bool zero_module() const {
    for (const auto& e : ext)
      if (e.nonzero) return false;
    return true;
  }
};

inline DualityProfile duality_profile(const FreeResolution& res,
                                      bool want_degrees = true) {
  const PolyRing& R = *res.ring;
  DualityProfile P;
  P.sigma = R.sigma();
  P.ext.resize(size_t(R.nvars()) + 1);
  for (int j = 0; j <= R.nvars(); ++j) {
    ExtModule e = ext_module(res, j, P.sigma, want_degrees);
    P.ext[size_t(j)].nonzero = !e.zero;
    if (!e.zero && want_degrees) P.ext[size_t(j)].gens = e.pres.row_degs;
  }
  return P;
}

struct AInvariants {
  int nvars = 0;
  Bideg sigma;
  bool zero_module = true;
  int depth = -1;  // nvars minus the top nonvanishing Ext index
  int dim = -1;    // nvars minus the bottom nonvanishing Ext index
  // a[i] = -(min x-degree of the generators of Ext^{nvars-i}); a_t[i] the
  // same in the t grading. Engaged exactly for depth <= i <= dim with
  // nonvanishing Ext.
  std::vector<std::optional<int>> a;
  std::vector<std::optional<int>> a_t;
  std::vector<ExtDegreeSummary> ext;  // raw profile by cohomological degree

  std::optional<int> a_star() const {
    std::optional<int> m;
    for (const auto& v : a)
      if (v && (!m || *v > *m)) m = *v;
    return m;
  }
  std::optional<int> a_star_t() const {
    std::optional<int> m;
    for (const auto& v : a_t)
      if (v && (!m || *v > *m)) m = *v;
    return m;
  }
};

inline AInvariants a_invariants_from(const FreeResolution& res) {
  const PolyRing& R = *res.ring;
  if (!R.graded()) throw Error("a-invariants require a graded ring");
  DualityProfile dp = duality_profile(res);

  AInvariants A;
  A.nvars = R.nvars();
  A.sigma = dp.sigma;
  A.ext = dp.ext;
  A.a.resize(size_t(A.nvars) + 1);
  A.a_t.resize(size_t(A.nvars) + 1);
  A.zero_module = dp.zero_module();
  if (A.zero_module) return A;

  int jmin = -1, jmax = -1;
  for (int j = 0; j <= A.nvars; ++j)
    if (dp.ext[size_t(j)].nonzero) {
      if (jmin < 0) jmin = j;
      jmax = j;
    }
  A.depth = A.nvars - jmax;
  A.dim = A.nvars - jmin;
  if (jmax != projective_dimension(res))
    throw Error("duality/Auslander-Buchsbaum depth cross-check failed");

  for (int j = jmin; j <= jmax; ++j) {
    const auto& e = dp.ext[size_t(j)];
    if (!e.nonzero) continue;
    int mx = INT32_MAX, mt = INT32_MAX;
    for (const auto& d : e.gens) {
      mx = std::min(mx, d.x);
      mt = std::min(mt, d.t);
    }
    A.a[size_t(A.nvars - j)] = -mx;
    A.a_t[size_t(A.nvars - j)] = -mt;
  }
  return A;
}

inline AInvariants a_invariants(const ModMatrix& pres) {
  return a_invariants_from(free_resolution(pres));
}

inline AInvariants a_invariants_of_quotient(const Ideal& I) {
  return a_invariants(presentation_of_quotient(I));
}

// max over i of a_i + i. When the ring is standard graded (every variable of
// degree (1,0)) the same number is recomputed from the Betti table and a
// mismatch is a hard error.
struct RegularityReport {
  int value = 0;
  bool checked_against_betti = false;
};

inline RegularityReport regularity_checked(const ModMatrix& pres) {
  FreeResolution res = free_resolution(pres);
  AInvariants A = a_invariants_from(res);
  if (A.zero_module) throw Error("regularity of the zero module");

  RegularityReport rep;
  int v = INT32_MIN;
  for (int i = 0; i <= A.nvars; ++i)
    if (A.a[size_t(i)]) v = std::max(v, *A.a[size_t(i)] + i);
  rep.value = v;

  const PolyRing& R = *pres.ring;
  bool standard = true;
  for (int i = 0; i < R.nvars(); ++i)
    if (R.var_bideg(i) != Bideg{1, 0}) standard = false;
  if (standard) {
    int rb = regularity_from_betti(betti_table(res));
    if (rb != v)
      throw Error("regularity cross-check failed: duality route " +
                  std::to_string(v) + ", Betti route " + std::to_string(rb));
    rep.checked_against_betti = true;
  }
  return rep;
}

inline RegularityReport regularity_of_quotient(const Ideal& I) {
  return regularity_checked(presentation_of_quotient(I));
}

struct CMReport {
  bool cm = false;
  bool zero_module = false;
  int dim = -1;
  int depth = -1;
};

// Graded test: depth from the duality profile, dimension cross-checked
// against the Hilbert series.
inline CMReport is_cm_graded(const ModMatrix& pres) {
  FreeResolution res = free_resolution(pres);
  AInvariants A = a_invariants_from(res);
  CMReport rep;
  if (A.zero_module) {
    rep.zero_module = true;
    rep.cm = true;
    return rep;
  }
  rep.dim = A.dim;
  rep.depth = A.depth;
  std::optional<int> kd = krull_dim(hilbert_series(pres));
  if (!kd || *kd != A.dim)
    throw Error("dimension cross-check failed: duality route " +
                std::to_string(A.dim) + ", Hilbert route " +
                (kd ? std::to_string(*kd) : std::string("empty")));
  rep.cm = (rep.dim == rep.depth);
  return rep;
}

// Quotient rings dispatch on size: small ambients take the duality route
// (which also yields the depth), large ones the resolution-free
// multiplicity certificate, whose cost is one Groebner basis and one
// zero-dimensional reduction instead of a full free resolution. When the
// certificate runs, depth is only known exactly in the affirmative case
// (depth = dim); a failed test leaves it unreported.
inline CMReport is_cm_graded_quotient(const Ideal& I) {
  if (I.ring()->nvars() >= 9) {
    std::optional<ParamCMReport> p = is_cm_by_parameters(I);
    if (p) {
      CMReport rep;
      rep.cm = p->cm;
      rep.zero_module = p->zero_module;
      rep.dim = p->dim;
      rep.depth = p->cm ? p->dim : -1;
      return rep;
    }
  }
  return is_cm_graded(presentation_of_quotient(I));
}

struct AffineCMReport {
  bool cm = false;
  bool empty = false;  // unit ideal, nothing to check
  int codim = -1;
  std::vector<int> nonvanishing;  // Ext indices that survive
};

// Affine (possibly ungraded) test for P/J Cohen-Macaulay and equidimensional:
// Ext^j(P/J, P) must vanish for every j other than the codimension.
inline AffineCMReport is_cm_equidim_affine(const Ideal& J) {
  const PolyRing& R = *J.ring();
  std::optional<int> dim = affine_dimension(J);
  AffineCMReport rep;
  if (!dim) {
    rep.empty = true;
    rep.cm = true;
    return rep;
  }
  rep.codim = R.nvars() - *dim;
  FreeResolution res =
      free_resolution(presentation_of_quotient(J), R.nvars() + 1);
  for (int j = 0; j <= R.nvars(); ++j) {
    ExtModule e = ext_module(res, j, Bideg{}, false);
    if (!e.zero) rep.nonvanishing.push_back(j);
  }
  rep.cm = (rep.nonvanishing == std::vector<int>{rep.codim});
  return rep;
}

}  // namespace reeslab
