#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reeslab/a_invariants.hpp"
#include "reeslab/calibration_state.hpp"
#include "reeslab/chart.hpp"
#include "reeslab/eliminate.hpp"
#include "reeslab/slices.hpp"

namespace reeslab {

// A graded base ring (ambient modulo rels) with a homogeneous ideal of
// positive height: the inputs every blow-up construction consumes.
struct BlowupInstance {
  RingPtr ambient;  // standard graded polynomial ring
  Ideal rels;       // base relations (zero for a polynomial base)
  Ideal ideal;      // the blown-up ideal, given by ambient representatives
  std::string label;

  const Ideal* rels_or_null() const {
    return rels.gens().empty() ? nullptr : &rels;
  }
};

inline BlowupInstance make_blowup(RingPtr ambient, Ideal rels, Ideal ideal,
                                  std::string label = "") {
  detail::require_standard_base(*ambient);
  if (!rels.ring()) rels = Ideal(ambient, {});
  if (rels.ring().get() != ambient.get() ||
      ideal.ring().get() != ambient.get())
    throw Error("blow-up: ideals must live in the ambient ring");
  if (!rels.is_homogeneous() || !ideal.is_homogeneous())
    throw Error("blow-up: input ideals must be homogeneous");
  if (!rels.gens().empty() && ideal_is_unit(rels))
    throw Error("blow-up: the base ring is zero");
  std::optional<int> dim_base =
      krull_dim(hilbert_series_of_quotient(rels));
  std::optional<int> dim_locus =
      krull_dim(hilbert_series_of_quotient(ideal_sum(ideal, rels)));
  if (!dim_base) throw Error("blow-up: the base ring is zero");
  if (dim_locus && *dim_locus >= *dim_base)
    throw Error("blow-up: the ideal must have positive height on the base");
  return BlowupInstance{std::move(ambient), std::move(rels), std::move(ideal),
                        std::move(label)};
}

inline int base_dim(const BlowupInstance& B) {
  return *krull_dim(hilbert_series_of_quotient(B.rels));
}

inline AInvariants base_a_invariants(const BlowupInstance& B) {
  return a_invariants_of_quotient(B.rels);
}

inline int base_a_star(const BlowupInstance& B) {
  std::optional<int> v = base_a_invariants(B).a_star();
  if (!v) throw Error("base ring has no a-invariant");
  return *v;
}

// Presentation of (the image of) I^n in the base ring, as a module over the
// ambient ring: rows are minimal generators, columns are the syzygies of the
// row [generators | base relations] projected to the generator coordinates.
inline ModMatrix ideal_module_presentation(const BlowupInstance& B, int n) {
  if (n < 1) throw Error("ideal module: the power must be positive");
  const RingPtr& R = B.ambient;
  std::vector<Polynomial> gens =
      minimal_generators(ideal_power(B.ideal, n), B.rels_or_null());
  if (gens.empty())
    throw Error("ideal module: the power vanishes on the base");

  ModMatrix A;
  A.ring = R;
  A.row_degs = {Bideg{0, 0}};
  std::vector<Bideg> gdegs;
  for (const auto& g : gens) {
    A.cols.push_back(g.terms());
    A.col_degs.push_back(*g.bideg());
    gdegs.push_back(*g.bideg());
  }
  for (const auto& r : B.rels.gens()) {
    A.cols.push_back(r.terms());
    A.col_degs.push_back(*r.bideg());
  }
  ModMatrix S = syzygies(A);

  ModMatrix P;
  P.ring = R;
  P.row_degs = gdegs;
  const int m = int(gens.size());
  for (int k = 0; k < S.ncols(); ++k) {
    MPoly proj;
    for (const auto& t : S.cols[size_t(k)])
      if (t.comp < m) proj.push_back(t);
    if (proj.empty()) continue;
    P.cols.push_back(std::move(proj));
    P.col_degs.push_back(S.col_degs[size_t(k)]);
  }
  return P;
}

inline AInvariants a_invariants_of_power(const BlowupInstance& B, int n) {
  return a_invariants(ideal_module_presentation(B, n));
}

inline int a_star_of_power(const BlowupInstance& B, int n) {
  std::optional<int> v = a_invariants_of_power(B, n).a_star();
  if (!v) throw Error("ideal module: zero module has no a-invariant");
  return *v;
}

namespace detail {

inline std::string fresh_var_name(std::string candidate, char bump,
                                  const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end())
    candidate.insert(candidate.begin(), bump);
  return candidate;
}

}  // namespace detail

// The blow-up algebra of an instance, presented as a bigraded quotient:
// base variables of degree (1,0), one fiber variable of degree (d_j,1) per
// chosen generator, and the defining ideal of the algebra inside that ring.
// When the generators share one degree the same presentation is recorded a
// second time with fiber degrees (0,1) (the standard bigrading).
struct ReesPresentation {
  BlowupInstance blowup;
  std::vector<Polynomial> fiber_gens;  // in the base ambient ring
  RingPtr ambient;                     // fiber degrees (d_j, 1)
  Ideal ideal;
  int base_vars = 0;
  int fiber_vars = 0;
  int dim = 0;  // Krull dimension of the algebra
  bool equigenerated = false;

  std::optional<RingPtr> std_ambient_;
  std::optional<Ideal> std_ideal_;

  const RingPtr& std_ambient() const {
    if (!std_ambient_)
      throw Error(
          "standard bigrading needs generators of one common degree");
    return *std_ambient_;
  }
  const Ideal& std_ideal() const {
    if (!std_ideal_)
      throw Error(
          "standard bigrading needs generators of one common degree");
    return *std_ideal_;
  }
};

// Presentation of the subalgebra generated over the base by the chosen
// generators placed in t-degree one. `fiber_override` substitutes a
// different generating ideal (for approximations and truncations); by
// default the instance ideal itself is used.
inline ReesPresentation rees_presentation(
    const BlowupInstance& B,
    const std::optional<Ideal>& fiber_override = std::nullopt) {
  const RingPtr& R = B.ambient;
  if (fiber_override && fiber_override->ring().get() != R.get())
    throw Error("blow-up algebra: override generators in the wrong ring");
  std::vector<Polynomial> gens = minimal_generators(
      fiber_override ? *fiber_override : B.ideal, B.rels_or_null());
  if (gens.empty()) throw Error("blow-up algebra: no fiber generators");

  const int r = R->nvars();
  const int s = int(gens.size());
  if (r + s > kMaxVars)
    throw Error("blow-up algebra exceeds the variable limit");
  const int64_t p = R->field().p();

  std::vector<std::string> names = R->var_names();
  std::vector<std::string> taken = names;
  std::vector<Bideg> degs(size_t(r), Bideg{1, 0});
  for (int j = 0; j < s; ++j) {
    std::string nm =
        detail::fresh_var_name("w" + std::to_string(j + 1), 'w', taken);
    taken.push_back(nm);
    names.push_back(nm);
    degs.push_back(Bideg{gens[size_t(j)].bideg()->x, 1});
  }
  RingPtr P = make_ring(p, names, degs);

  // Target: base ring with one extra variable of degree (0,1).
  std::vector<std::string> tnames = R->var_names();
  tnames.push_back(detail::fresh_var_name("t", 't', taken));
  std::vector<Bideg> tdegs(size_t(r), Bideg{1, 0});
  tdegs.push_back(Bideg{0, 1});
  RingPtr Rt = make_ring(p, tnames, tdegs);

  std::vector<int> base_map(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) base_map[size_t(i)] = i;
  Polynomial tvar = Polynomial::variable(Rt, r);

  std::vector<Polynomial> images;
  for (int i = 0; i < r; ++i) images.push_back(Polynomial::variable(Rt, i));
  for (const auto& g : gens)
    images.push_back(poly_mul(transport_poly(g, Rt, base_map), tvar));

  std::vector<Polynomial> rels_t;
  for (const auto& g : B.rels.gens())
    rels_t.push_back(transport_poly(g, Rt, base_map));

  Ideal Q = kernel_of_map(RingMap(P, Rt, std::move(images)),
                          Ideal(Rt, std::move(rels_t)));

  std::optional<int> drees = krull_dim(hilbert_series_of_quotient(Q));
  int dbase = base_dim(B);
  if (!drees || *drees != dbase + 1)
    throw Error("blow-up algebra dimension check failed");

  ReesPresentation out;
  out.blowup = B;
  out.fiber_gens = std::move(gens);
  out.ambient = P;
  out.ideal = Q;
  out.base_vars = r;
  out.fiber_vars = s;
  out.dim = *drees;
  out.equigenerated = true;
  for (const auto& g : out.fiber_gens)
    if (g.bideg()->x != out.fiber_gens.front().bideg()->x)
      out.equigenerated = false;
  if (out.equigenerated) {
    std::vector<Bideg> sdegs(size_t(r), Bideg{1, 0});
    for (int j = 0; j < s; ++j) sdegs.push_back(Bideg{0, 1});
    RingPtr Ps = make_ring(p, names, sdegs);
    std::vector<int> id(static_cast<size_t>(r + s));
    for (int i = 0; i < r + s; ++i) id[size_t(i)] = i;
    std::vector<Polynomial> sgens;
    for (const auto& q : Q.gens())
      sgens.push_back(transport_poly(q, Ps, id));
    out.std_ambient_ = Ps;
    out.std_ideal_ = Ideal(Ps, std::move(sgens));
  }
  return out;
}

// The subalgebra of the base generated by a k-basis of one slice of one
// ideal power, presented as a standard graded quotient of a polynomial ring
// with one variable per basis element.
struct DiagonalPresentation {
  RingPtr ring;
  Ideal ideal;
  std::vector<Polynomial> images;  // variable i maps to images[i]
  int power = 1;
  int degree = 0;
};

inline DiagonalPresentation diagonal_presentation(const BlowupInstance& B,
                                                  int e, int c) {
  const RingPtr& R = B.ambient;
  SliceBasis s = ideal_slice(B.ideal, e, c, B.rels_or_null());
  if (s.basis.empty())
    throw Error("diagonal algebra: the selected slice is zero");
  const int N = int(s.basis.size());
  if (N + R->nvars() > kMaxVars)
    throw Error("diagonal algebra exceeds the variable limit");

  std::vector<std::string> taken = R->var_names();
  std::vector<std::string> names;
  for (int i = 0; i < N; ++i) {
    std::string nm =
        detail::fresh_var_name("z" + std::to_string(i + 1), 'z', taken);
    taken.push_back(nm);
    names.push_back(nm);
  }
  RingPtr D = make_ring(R->field().p(), names);
  Ideal Q = kernel_of_map(RingMap(D, R, s.basis), B.rels);
  return DiagonalPresentation{D, Q, s.basis, e, c};
}

inline ReesPresentation truncated_rees_presentation(const BlowupInstance& B,
                                                    int e, int c) {
  TruncationGenerators tg =
      truncation_generators(B.ideal, e, c, B.rels_or_null());
  if (tg.ideal.gens().empty())
    throw Error("truncated blow-up algebra: the selected slice is zero");
  return rees_presentation(B, tg.ideal);
}

// Chart-by-chart Cohen-Macaulay test of the blow-up algebra over the
// projective base: each base variable is inverted in turn and the
// dehomogenized presentation is tested as an affine ring.
struct ChartCMReport {
  std::string chart_var;
  AffineCMReport report;
};

struct LocalCMReport {
  bool all_cm = true;
  std::vector<ChartCMReport> charts;
};

inline LocalCMReport locally_cm_on_proj(const ReesPresentation& S) {
  LocalCMReport out;
  for (int i = 0; i < S.base_vars; ++i) {
    Chart ch = chart_at(S.ambient, i);
    AffineCMReport rep = is_cm_equidim_affine(dehomogenize(ch, S.ideal));
    out.all_cm = out.all_cm && rep.cm;
    out.charts.push_back({S.ambient->var_name(i), rep});
  }
  return out;
}

enum class ReesModule { structure, canonical };

// Presentation (over the bigraded ambient ring) of the canonical module of
// the blow-up algebra, obtained by dualizing at the codimension.
struct CanonicalModule {
  ModMatrix pres;
  int codim = 0;
};

inline CanonicalModule canonical_module_rees(const ReesPresentation& S) {
  const RingPtr& P = S.ambient;
  ModMatrix pres = presentation_of_quotient(S.ideal);
  FreeResolution res = free_resolution(pres);
  std::optional<int> d = krull_dim(hilbert_series(pres));
  if (!d) throw Error("canonical module: the algebra is zero");
  int codim = P->nvars() - *d;
  ExtModule w = ext_module(res, codim, P->sigma());
  if (w.zero)
    throw Error("canonical module: dual at the codimension vanished");
  return CanonicalModule{std::move(w.pres), codim};
}

namespace detail {

// Largest t-degree visible to the fiber grading: scan the duals against the
// dualizing twist for cohomological degrees up to the fiber count and take
// the best -min over the generator t-degrees.
inline int t_a_star_unchecked(const ReesPresentation& S, ReesModule which) {
  const RingPtr& P = S.ambient;
  const Bideg sigma = P->sigma();
  ModMatrix pres = which == ReesModule::structure
                       ? presentation_of_quotient(S.ideal)
                       : canonical_module_rees(S).pres;
  FreeResolution res = free_resolution(pres);
  const int jcap = std::min(S.fiber_vars, P->nvars());
  std::optional<int> best;
  for (int j = 0; j <= jcap; ++j) {
    ExtModule E = ext_module(res, j, sigma);
    if (E.zero) continue;
    int mt = INT32_MAX;
    for (const auto& d : E.pres.row_degs) mt = std::min(mt, d.t);
    if (!best || -mt > *best) best = -mt;
  }
  if (!best)
    throw Error("t-grading invariant: no dual in the fiber range");
  return *best;
}

}  // namespace detail

// a^*-invariant of the fiber (t) grading of the blow-up algebra or of its
// canonical module. Gated behind the anchor suite because the formula rests
// on a collapse that the anchors pin down numerically.
inline int rees_t_grading_a_star(const ReesPresentation& S, ReesModule which) {
  require_calibration(S.ambient->field().p());
  return detail::t_a_star_unchecked(S, which);
}

// Componentwise a-invariants in the standard bigrading: the negatives of the
// minimal generator degrees of the canonical module, one per component.
struct BigradedAInvariants {
  int a_x = 0;
  int a_t = 0;
  int codim = 0;
  std::vector<Bideg> omega_gens;
};

inline BigradedAInvariants bigraded_a_invariants(const ReesPresentation& S) {
  const RingPtr& P = S.std_ambient();
  ModMatrix pres = presentation_of_quotient(S.std_ideal());
  FreeResolution res = free_resolution(pres);
  std::optional<int> d = krull_dim(hilbert_series(pres));
  if (!d) throw Error("bigraded invariants: the algebra is zero");
  int codim = P->nvars() - *d;
  ExtModule w = ext_module(res, codim, P->sigma());
  if (w.zero)
    throw Error("bigraded invariants: dual at the codimension vanished");
  BigradedAInvariants out;
  out.codim = codim;
  out.omega_gens = w.pres.row_degs;
  int mx = INT32_MAX, mt = INT32_MAX;
  for (const auto& g : out.omega_gens) {
    mx = std::min(mx, g.x);
    mt = std::min(mt, g.t);
  }
  out.a_x = -mx;
  out.a_t = -mt;
  return out;
}

}  // namespace reeslab
