#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "reeslab/module.hpp"
#include "reeslab/resolution.hpp"

namespace reeslab {

// Integer bivariate polynomial with (possibly negative) Bideg exponents.
struct BiPoly {
  std::map<Bideg, long long> c;

  bool is_zero() const { return c.empty(); }
  void set(const Bideg& d, long long v) {
    if (v != 0) c[d] = v;
  }
  void add_term(const Bideg& d, long long v) {
    auto it = c.find(d);
    long long nv = (it == c.end() ? 0 : it->second) + v;
    if (nv == 0) {
      if (it != c.end()) c.erase(it);
    } else {
      c[d] = nv;
    }
  }
  bool operator==(const BiPoly& o) const { return c == o.c; }
};

inline BiPoly bipoly_one() {
  BiPoly p;
  p.set(Bideg{0, 0}, 1);
  return p;
}

inline BiPoly bipoly_add(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [d, v] : b.c) r.add_term(d, v);
  return r;
}

inline BiPoly bipoly_scale(const BiPoly& a, long long s) {
  BiPoly r;
  for (const auto& [d, v] : a.c) r.set(d, v * s);
  return r;
}

inline BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [da, va] : a.c)
    for (const auto& [db, vb] : b.c) r.add_term(da + db, va * vb);
  return r;
}

// 1 - z^d
inline BiPoly bipoly_one_minus(const Bideg& d) {
  BiPoly r = bipoly_one();
  r.add_term(d, -1);
  return r;
}

namespace detail {

inline std::vector<Expo> minimize_monomials(const std::vector<Expo>& gens,
                                            int nv) {
  std::vector<Expo> live;
  for (const auto& m : gens) {
    bool keep = true;
    for (const auto& h : live)
      if (divides(h, m, nv)) {
        keep = false;
        break;
      }
    if (!keep) continue;
    std::vector<Expo> next;
    for (const auto& h : live)
      if (!divides(m, h, nv)) next.push_back(h);
    next.push_back(m);
    live = std::move(next);
  }
  return live;
}

// Numerator of the Hilbert series of P/L over the full denominator
// prod_i (1 - z^{deg x_i}), by pivot recursion on the staircase.
inline BiPoly staircase_numerator(const PolyRing& R, std::vector<Expo> gens,
                                  size_t* budget) {
  const int nv = R.nvars();
  gens = minimize_monomials(gens, nv);
  if (gens.empty()) return bipoly_one();
  for (const auto& m : gens)
    if (is_one(m, nv)) return BiPoly{};
  if ((*budget)-- == 0) throw Error("Hilbert numerator recursion too deep");

  // Pairwise coprime generators form a regular sequence.
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!mono_coprime(gens[i], gens[j], nv)) coprime = false;
  if (coprime) {
    BiPoly r = bipoly_one();
    for (const auto& m : gens)
      r = bipoly_mul(r, bipoly_one_minus(R.mono_bideg(m)));
    return r;
  }

  // Pivot on the most shared variable.
  int best = -1, best_count = 0;
  for (int i = 0; i < nv; ++i) {
    int cnt = 0;
    for (const auto& m : gens)
      if (m.e[i] > 0) cnt++;
    if (cnt > best_count) {
      best_count = cnt;
      best = i;
    }
  }
  // L + (x_j): generators free of x_j, plus x_j itself.
  std::vector<Expo> plus;
  for (const auto& m : gens)
    if (m.e[best] == 0) plus.push_back(m);
  Expo xj;
  xj.e[best] = 1;
  plus.push_back(xj);
  // L : x_j (divide one power of x_j where present).
  std::vector<Expo> colon;
  for (const auto& m : gens) {
    Expo q = m;
    if (q.e[best] > 0) q.e[best]--;
    colon.push_back(q);
  }
  BiPoly a = staircase_numerator(R, std::move(plus), budget);
  BiPoly b = staircase_numerator(R, std::move(colon), budget);
  BiPoly shift;
  shift.set(R.var_bideg(best), 1);
  return bipoly_add(a, bipoly_mul(shift, b));
}

// Lead-term exponents of the column span of A, bucketed by component.
inline std::vector<std::vector<Expo>> lead_modules(const ModMatrix& A) {
  std::vector<std::vector<Expo>> leads(A.nrows());
  if (A.ncols() == 0) return leads;
  std::vector<int> shifts;
  for (const auto& d : A.row_degs) shifts.push_back(d.total());
  ModGBResult gb = module_groebner(A.ring, A.cols, A.nrows(), shifts);
  for (const auto& h : gb.basis)
    if (!h.empty()) leads[h.front().comp].push_back(h.front().m);
  return leads;
}

}  // namespace detail

struct HilbertSeries {
  BiPoly num;
  std::vector<Bideg> den;  // factors (1 - z^d), one per variable
};

// Hilbert series of coker(A) by the staircase route.
inline HilbertSeries hilbert_series(const ModMatrix& A) {
  const PolyRing& R = *A.ring;
  if (!R.graded()) throw Error("Hilbert series needs a graded ring");
  check_matrix(A);
  HilbertSeries H;
  H.den = R.var_bidegs();
  auto leads = detail::lead_modules(A);
  size_t budget = size_t(1) << 22;
  for (int r = 0; r < A.nrows(); ++r) {
    BiPoly nr = detail::staircase_numerator(R, leads[r], &budget);
    BiPoly shift;
    shift.set(A.row_degs[r], 1);
    H.num = bipoly_add(H.num, bipoly_mul(shift, nr));
  }
  return H;
}

inline HilbertSeries hilbert_series_of_quotient(const Ideal& I) {
  return hilbert_series(presentation_of_quotient(I));
}

// Same numerator from a (minimal or not) free resolution: the alternating
// sum of the step generator degrees.
inline HilbertSeries hilbert_series_from_resolution(const FreeResolution& res) {
  if (!res.ring->graded()) throw Error("Hilbert series needs a graded ring");
  if (!res.complete) throw Error("Hilbert series needs a complete resolution");
  HilbertSeries H;
  H.den = res.ring->var_bidegs();
  long long sign = 1;
  for (int i = 0; i <= res.length(); ++i) {
    for (const auto& d : res.step_degs(i)) H.num.add_term(d, sign);
    sign = -sign;
  }
  return H;
}

// Krull dimension from the series: number of denominator factors minus the
// multiplicity of the numerator zero at u = 1 after specializing both
// gradings to one variable. nullopt for the zero module.
inline std::optional<int> krull_dim(const HilbertSeries& H) {
  if (H.num.is_zero()) return std::nullopt;
  std::map<int, long long> f;
  for (const auto& [d, v] : H.num.c) {
    f[d.x + d.t] += v;
    if (f[d.x + d.t] == 0) f.erase(d.x + d.t);
  }
  int mult = 0;
  while (!f.empty()) {
    long long at1 = 0;
    for (const auto& [e, v] : f) at1 += v;
    if (at1 != 0) break;
    // Divide by (1 - u) via prefix sums on a dense window.
    int lo = f.begin()->first, hi = f.rbegin()->first;
    std::vector<long long> dense(size_t(hi - lo + 1), 0);
    for (const auto& [e, v] : f) dense[size_t(e - lo)] = v;
    std::map<int, long long> g;
    long long run = 0;
    for (int e = lo; e <= hi; ++e) {
      run += dense[size_t(e - lo)];
      if (e < hi && run != 0) g[e] = run;
    }
    f = std::move(g);
    mult++;
    if (f.empty()) break;
  }
  return int(H.den.size()) - mult;
}

// Value of the Hilbert function of coker(A) at one bidegree, by counting
// standard monomials directly (independent of the series bookkeeping).
inline long long hilbert_function(const ModMatrix& A, const Bideg& target) {
  const PolyRing& R = *A.ring;
  if (!R.graded()) throw Error("Hilbert function needs a graded ring");
  auto leads = detail::lead_modules(A);
  const int nv = R.nvars();
  long long total = 0;
  for (int r = 0; r < A.nrows(); ++r) {
    Bideg need = target - A.row_degs[r];
    if (need.x < 0 || need.t < 0) continue;
    // Depth-first over exponents.
    std::vector<int> e(size_t(nv), 0);
    std::function<void(int, Bideg)> rec = [&](int i, Bideg left) {
      if (left.x == 0 && left.t == 0) {
        // Remaining variables forced to zero: check membership.
        Expo m;
        for (int k = 0; k < nv; ++k) m.e[k] = int16_t(e[size_t(k)]);
        for (const auto& g : leads[r])
          if (divides(g, m, nv)) return;
        total++;
        return;
      }
      if (i >= nv) return;
      const Bideg& d = R.var_bideg(i);
      int cap1 = d.x > 0 ? left.x / d.x : INT32_MAX;
      int cap2 = d.t > 0 ? left.t / d.t : INT32_MAX;
      int cap = std::min(cap1, cap2);
      if (cap == INT32_MAX) cap = 0;  // defensive; graded vars are nonzero
      for (int k = 0; k <= cap; ++k) {
        e[size_t(i)] = k;
        rec(i + 1, Bideg{left.x - k * d.x, left.t - k * d.t});
      }
      e[size_t(i)] = 0;
    };
    rec(0, need);
  }
  return total;
}

// Dimension of P/I from the independent sets of the lead-term ideal
// (works for ungraded charts too). nullopt for the unit ideal.
inline std::optional<int> affine_dimension(const Ideal& I) {
  const PolyRing& R = *I.ring();
  const int nv = R.nvars();
  if (nv > 24) throw Error("affine dimension: too many variables");
  std::vector<uint32_t> supports;
  for (const auto& g : groebner_basis(I).basis) {
    uint32_t s = 0;
    for (int i = 0; i < nv; ++i)
      if (g.lead().m.e[i] > 0) s |= uint32_t(1) << i;
    if (s == 0) return std::nullopt;  // unit ideal
    supports.push_back(s);
  }
  int best = -1;
  for (uint32_t sub = 0; sub < (uint32_t(1) << nv); ++sub) {
    bool ok = true;
    for (uint32_t s : supports)
      if ((s & ~sub) == 0) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, __builtin_popcount(sub));
  }
  return best;
}

}  // namespace reeslab
