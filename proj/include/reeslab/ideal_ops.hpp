#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "reeslab/buchberger.hpp"
#include "reeslab/ideal.hpp"

namespace reeslab {

namespace detail {

inline bool all_monomial(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (g.size() > 1) return false;
  return true;
}

// Divisibility-minimal subset of a monomial generator list, ascending.
inline std::vector<Polynomial> prune_monomials(const RingPtr& ring,
                                               std::vector<Polynomial> gens) {
  const int nv = ring->nvars();
  std::vector<Polynomial> live;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    const Expo& m = g.lead().m;
    bool keep = true;
    for (const auto& h : live)
      if (divides(h.lead().m, m, nv)) {
        keep = false;
        break;
      }
    if (!keep) continue;
    std::vector<Polynomial> next;
    for (auto& h : live)
      if (!divides(m, h.lead().m, nv)) next.push_back(std::move(h));
    next.push_back(poly_monic(g));
    live = std::move(next);
  }
  std::sort(live.begin(), live.end(), [&](const Polynomial& a,
                                          const Polynomial& b) {
    return term_cmp(*ring, a.lead(), b.lead()) < 0;
  });
  live.erase(std::unique(live.begin(), live.end(),
                         [](const Polynomial& a, const Polynomial& b) {
                           return a.terms() == b.terms();
                         }),
             live.end());
  return live;
}

}  // namespace detail

// Minimal homogeneous generators of I, optionally modulo a background ideal
// J (so the result minimally generates the image of I in R/J). Greedy by
// ascending degree; correct for graded rings by the usual Nakayama argument.
inline std::vector<Polynomial> minimal_generators(const Ideal& I,
                                                  const Ideal* modJ = nullptr) {
  const RingPtr& ring = I.ring();
  if (modJ == nullptr && detail::all_monomial(I.gens()))
    return detail::prune_monomials(ring, I.gens());
  if (!ring->graded())
    throw Error("minimal generators need a graded ring");
  std::vector<Polynomial> sorted = I.gens();
  for (const auto& g : sorted)
    if (!g.is_homogeneous())
      throw Error("minimal generators need homogeneous input");
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Polynomial& a, const Polynomial& b) {
                     if (a.bideg()->total() != b.bideg()->total())
                       return a.bideg()->total() < b.bideg()->total();
                     return term_cmp(*ring, a.lead(), b.lead()) < 0;
                   });
  std::vector<Polynomial> kept;
  for (const auto& g : sorted) {
    std::vector<Polynomial> test = kept;
    if (modJ)
      for (const auto& j : modJ->gens()) test.push_back(j);
    Ideal K(ring, std::move(test));
    if (!ideal_contains(K, g)) kept.push_back(poly_monic(g));
  }
  return kept;
}

// Largest total degree among minimal generators; 0 for the zero ideal.
inline int max_gen_degree(const Ideal& I, const Ideal* modJ = nullptr) {
  int d = 0;
  for (const auto& g : minimal_generators(I, modJ))
    d = std::max(d, g.max_total_degree());
  return d;
}

inline Ideal ideal_sum(const Ideal& A, const Ideal& B) {
  if (A.ring().get() != B.ring().get())
    throw Error("ideal sum across different rings");
  std::vector<Polynomial> gens = A.gens();
  for (const auto& g : B.gens()) gens.push_back(g);
  return Ideal(A.ring(), std::move(gens));
}

// Pairwise products of generators, pruned to a smaller generating set when
// possible (divisibility for monomials, greedy membership when graded).
inline Ideal ideal_product(const Ideal& A, const Ideal& B) {
  if (A.ring().get() != B.ring().get())
    throw Error("ideal product across different rings");
  const RingPtr& ring = A.ring();
  std::vector<Polynomial> prods;
  for (const auto& a : A.gens())
    for (const auto& b : B.gens()) prods.push_back(poly_mul(a, b));
  if (detail::all_monomial(prods))
    return Ideal(ring, detail::prune_monomials(ring, prods));
  Ideal raw(ring, std::move(prods));
  if (ring->graded() && raw.is_homogeneous())
    return Ideal(ring, minimal_generators(raw));
  return raw;
}

inline Ideal ideal_power(const Ideal& I, int n) {
  if (n < 0) throw Error("negative ideal power");
  const RingPtr& ring = I.ring();
  if (n == 0) return Ideal(ring, {Polynomial::constant(ring, 1)});
  Ideal acc = I;
  for (int k = 1; k < n; ++k) acc = ideal_product(acc, I);
  return acc;
}

}  // namespace reeslab
