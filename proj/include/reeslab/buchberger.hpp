#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "reeslab/deadline.hpp"
#include "reeslab/ideal.hpp"
#include "reeslab/polynomial.hpp"

namespace reeslab {

inline MPoly mpoly_mul_mono(const PolyRing& R, const MPoly& f, int64_t c,
                            const Expo& u, int udeg) {
  MPoly out;
  out.reserve(f.size());
  const int nv = R.nvars();
  for (const auto& t : f) {
    MTerm s = t;
    s.m = mono_mul(t.m, u, nv);
    s.deg = t.deg + udeg;
    s.c = R.field().mul(t.c, c);
    out.push_back(s);
  }
  return out;
}

namespace detail {

// Geobucket accumulator: terms are spread over buckets of geometrically
// growing capacity so that long chains of subtractions merge in amortized
// near-linear time instead of rewriting one long vector per step. Buckets
// are kept individually sorted and duplicate-free; the head index avoids
// front erasures.
class Geobucket {
 public:
  Geobucket(const PolyRing& R, MPoly v) : R_(R) { push(std::move(v)); }

  // p must be sorted descending with distinct terms (any normalized
  // polynomial, or a monomial multiple of one).
  void push(MPoly p) {
    if (p.empty()) return;
    size_t i = slot(p.size());
    for (;;) {
      if (i >= b_.size()) {
        b_.resize(i + 1);
        h_.resize(i + 1, 0);
      }
      if (h_[i] >= b_[i].size()) {
        b_[i] = std::move(p);
        h_[i] = 0;
        return;
      }
      p = merged(b_[i], h_[i], p);
      b_[i].clear();
      h_[i] = 0;
      if (p.empty()) return;
      i = std::max(i + 1, slot(p.size()));
    }
  }

  // Extract the maximal remaining term (coefficients of equal monomials are
  // combined; exact cancellations are skipped). False when empty.
  bool pop_lead(MTerm& out) {
    for (;;) {
      int best = -1;
      for (size_t i = 0; i < b_.size(); ++i) {
        if (h_[i] >= b_[i].size()) continue;
        if (best < 0 ||
            term_cmp(R_, b_[i][h_[i]], b_[size_t(best)][h_[size_t(best)]]) > 0)
          best = int(i);
      }
      if (best < 0) return false;
      MTerm t = b_[size_t(best)][h_[size_t(best)]++];
      for (size_t i = 0; i < b_.size(); ++i) {
        if (h_[i] >= b_[i].size()) continue;
        const MTerm& s = b_[i][h_[i]];
        if (s.comp == t.comp && s.m == t.m) {
          t.c = R_.field().add(t.c, s.c);
          h_[i]++;
        }
      }
      if (t.c != 0) {
        out = t;
        return true;
      }
    }
  }

 private:
  static size_t slot(size_t n) {
    size_t i = 0, cap = 4;
    while (n > cap) {
      cap <<= 1;
      ++i;
    }
    return i;
  }

  MPoly merged(const MPoly& a, size_t ha, const MPoly& p) const {
    MPoly out;
    out.reserve((a.size() - ha) + p.size());
    size_t i = ha, j = 0;
    while (i < a.size() && j < p.size()) {
      int r = term_cmp(R_, a[i], p[j]);
      if (r > 0) {
        out.push_back(a[i++]);
      } else if (r < 0) {
        out.push_back(p[j++]);
      } else {
        int64_t c = R_.field().add(a[i].c, p[j].c);
        if (c != 0) {
          MTerm t = a[i];
          t.c = c;
          out.push_back(t);
        }
        ++i;
        ++j;
      }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < p.size()) out.push_back(p[j++]);
    return out;
  }

  const PolyRing& R_;
  std::vector<MPoly> b_;
  std::vector<size_t> h_;
};

}  // namespace detail

// Divide v by the (monic-lead) basis: v = sum q_k * basis[k] + rem, where no
// term of rem is divisible by any lead term with matching component. If quot
// is non-null it receives q as a vector over the basis indices (comp = k).
inline MPoly module_normal_form(const PolyRing& R, MPoly v,
                                const std::vector<MPoly>& basis,
                                MPoly* quot = nullptr) {
  const int nv = R.nvars();

  // Reducers bucketed by lead component so each term only scans candidates
  // that can actually match.
  int maxc = -1;
  for (const auto& g : basis)
    if (!g.empty()) maxc = std::max(maxc, int(g.front().comp));
  std::vector<std::vector<int>> by_comp(size_t(maxc + 1));
  for (size_t k = 0; k < basis.size(); ++k)
    if (!basis[k].empty())
      by_comp[size_t(basis[k].front().comp)].push_back(int(k));

  detail::Geobucket acc(R, std::move(v));
  MPoly rem;
  MPoly q;
  size_t guard = 0;
  MTerm t;
  while (acc.pop_lead(t)) {
    detail::poll_deadline();
    int hit = -1;
    if (t.comp <= maxc)
      for (int k : by_comp[size_t(t.comp)]) {
        const MTerm& lt = basis[size_t(k)].front();
        if (lt.deg <= t.deg && divides(lt.m, t.m, nv)) {
          hit = k;
          break;
        }
      }
    if (hit < 0) {
      rem.push_back(t);  // pops come out strictly decreasing
      continue;
    }
    const MTerm& lt = basis[size_t(hit)].front();
    int64_t c = R.field().mul(t.c, R.field().inv(lt.c));
    Expo u = mono_div(t.m, lt.m, nv);
    int udeg = t.deg - lt.deg;
    // The lead of c*u*basis[hit] cancels t exactly; push the scaled tail.
    const MPoly& g = basis[size_t(hit)];
    if (g.size() > 1) {
      MPoly piece;
      piece.reserve(g.size() - 1);
      int64_t nc = R.field().neg(c);
      for (size_t a = 1; a < g.size(); ++a) {
        MTerm o = g[a];
        o.m = mono_mul(g[a].m, u, nv);
        o.deg = g[a].deg + udeg;
        o.c = R.field().mul(g[a].c, nc);
        piece.push_back(o);
      }
      acc.push(std::move(piece));
    }
    if (quot) {
      MTerm qt;
      qt.m = u;
      qt.comp = hit;
      qt.c = c;
      qt.deg = udeg;
      q.push_back(qt);
    }
    if (++guard > (size_t(1) << 26))
      throw Error("normal form failed to terminate");
  }
  if (quot) {
    mpoly_normalize(R, q);
    *quot = std::move(q);
  }
  return rem;
}

struct ModGBOptions {
  bool want_tags = false;   // track basis[k] = sum_j tags[k](comp j) * gens[j]
  int degree_bound = -1;    // skip pairs above this degree (sets truncated)
  bool interreduce = true;  // produce the reduced basis
};

struct ModGBResult {
  std::vector<MPoly> basis;  // monic; leads pairwise non-divisible if reduced
  std::vector<MPoly> tags;   // parallel to basis when requested
  bool truncated = false;
};

namespace detail {

struct SPair {
  int pdeg;   // total degree of the lcm plus row shift
  int sugar;  // sugar bound on the s-vector degree
  int i, j;   // basis indices, i < j
  Expo lcm;
  bool operator<(const SPair& o) const {
    if (pdeg != o.pdeg) return pdeg < o.pdeg;
    if (sugar != o.sugar) return sugar < o.sugar;
    if (j != o.j) return j < o.j;
    return i < o.i;
  }
};

inline int max_term_degree(const MPoly& f) {
  int d = 0;
  for (const auto& t : f) d = std::max(d, int(t.deg));
  return d;
}

}  // namespace detail

// Buchberger's algorithm over a free module. gens are vectors with
// components in [0, ncomp); shifts (one total degree per component) feed
// the pair-selection order and the degree bound, nothing else. Returns a
// monic basis; with interreduce, the reduced basis (unique for a fixed
// monomial order, so ideal-level results are canonical).
inline ModGBResult module_groebner(const RingPtr& ring, std::vector<MPoly> gens,
                                   int ncomp, std::vector<int> shifts = {},
                                   ModGBOptions opt = {}) {
  const PolyRing& R = *ring;
  const int nv = R.nvars();
  if (shifts.empty()) shifts.assign(size_t(std::max(ncomp, 1)), 0);
  if (int(shifts.size()) != ncomp && ncomp > 0)
    throw Error("module_groebner: shift count mismatch");

  ModGBResult res;
  auto& basis = res.basis;
  auto& tags = res.tags;
  std::vector<int> sugar;

  // Monomial input fast path: the reduced basis is the divisibility-minimal
  // subset, with trivial tags.
  bool all_mono = true;
  for (const auto& g : gens)
    if (g.size() > 1) {
      all_mono = false;
      break;
    }
  if (all_mono) {
    std::vector<size_t> live;
    for (size_t a = 0; a < gens.size(); ++a) {
      if (gens[a].empty()) continue;
      bool keep = true;
      for (size_t b : live)
        if (gens[b].front().comp == gens[a].front().comp &&
            divides(gens[b].front().m, gens[a].front().m, nv)) {
          keep = false;
          break;
        }
      if (!keep) continue;
      std::vector<size_t> next;
      for (size_t b : live)
        if (!(gens[a].front().comp == gens[b].front().comp &&
              divides(gens[a].front().m, gens[b].front().m, nv)))
          next.push_back(b);
      next.push_back(a);
      live = std::move(next);
    }
    std::sort(live.begin(), live.end(), [&](size_t a, size_t b) {
      int r = term_cmp(R, gens[a].front(), gens[b].front());
      if (r != 0) return r < 0;
      return a < b;
    });
    for (size_t a : live) {
      MPoly g = gens[a];
      mpoly_monic(R, g);
      basis.push_back(std::move(g));
      if (opt.want_tags) {
        MTerm e;
        e.comp = int32_t(a);
        e.c = R.field().inv(gens[a].front().c);
        tags.push_back(MPoly{e});
      }
    }
    return res;
  }

  std::multiset<detail::SPair> pairs;
  std::set<std::pair<int, int>> done;
  std::vector<char> redundant;

  auto lead_shift = [&](const MPoly& g) {
    return g.front().comp < int(shifts.size()) ? shifts[g.front().comp] : 0;
  };

  // Pair bookkeeping in the style of Gebauer-Moeller: dominated new pairs
  // are never queued, queued pairs made obsolete by the new lead are erased,
  // and elements whose lead becomes divisible stop producing pairs (they stay
  // in the array as reducers; interreduction drops them at the end).
  auto push_pairs = [&](int t) {
    const MTerm& lt = basis[t].front();
    struct Cand {
      int k;
      Expo lcm;
      int ldeg;
      bool coprime;
    };
    std::vector<Cand> cand;
    for (int k = 0; k < t; ++k) {
      if (redundant[k] || basis[k].empty()) continue;
      const MTerm& lk = basis[k].front();
      if (lk.comp != lt.comp) continue;
      Cand c;
      c.k = k;
      c.lcm = mono_lcm(lk.m, lt.m, nv);
      c.ldeg = total_degree(c.lcm, nv);
      c.coprime = ncomp == 1 && mono_coprime(lk.m, lt.m, nv);
      cand.push_back(c);
    }
    // Drop a candidate when another live candidate's lcm divides its lcm.
    // Coprime candidates always stay for this round so they can dominate
    // others, and are then discarded by the product criterion (ring case).
    std::vector<char> drop(cand.size(), 0);
    for (size_t a = 0; a < cand.size(); ++a) {
      if (cand[a].coprime) continue;
      for (size_t b = 0; b < cand.size(); ++b) {
        if (b == a || drop[b]) continue;
        if (divides(cand[b].lcm, cand[a].lcm, nv)) {
          drop[a] = 1;
          break;
        }
      }
    }
    // Queued pairs whose lcm the new lead divides strictly are superseded.
    for (auto it = pairs.begin(); it != pairs.end();) {
      const MTerm& li = basis[it->i].front();
      const MTerm& lj = basis[it->j].front();
      if (li.comp == lt.comp && divides(lt.m, it->lcm, nv) &&
          !(mono_lcm(li.m, lt.m, nv) == it->lcm) &&
          !(mono_lcm(lj.m, lt.m, nv) == it->lcm))
        it = pairs.erase(it);
      else
        ++it;
    }
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      if (cand[a].coprime) {
        done.insert({cand[a].k, t});
        continue;
      }
      const MTerm& lk = basis[cand[a].k].front();
      detail::SPair p;
      p.i = cand[a].k;
      p.j = t;
      p.lcm = cand[a].lcm;
      p.pdeg = cand[a].ldeg + lead_shift(basis[t]);
      p.sugar = std::max(sugar[cand[a].k] + (cand[a].ldeg - int(lk.deg)),
                         sugar[t] + (cand[a].ldeg - int(lt.deg)));
      pairs.insert(p);
    }
    for (int k = 0; k < t; ++k)
      if (!redundant[k] && !basis[k].empty() &&
          basis[k].front().comp == lt.comp &&
          divides(lt.m, basis[k].front().m, nv))
        redundant[k] = 1;
  };

  auto add_element = [&](MPoly h, MPoly tag, int sug) {
    int64_t lc = h.front().c;
    if (lc != 1) {
      int64_t inv = R.field().inv(lc);
      mpoly_scale(R, h, inv);
      if (opt.want_tags) mpoly_scale(R, tag, inv);
    }
    basis.push_back(std::move(h));
    sugar.push_back(sug);
    redundant.push_back(0);
    if (opt.want_tags) tags.push_back(std::move(tag));
    push_pairs(int(basis.size()) - 1);
  };

  for (size_t a = 0; a < gens.size(); ++a) {
    if (gens[a].empty()) continue;
    MPoly tag;
    if (opt.want_tags) {
      MTerm e;
      e.comp = int32_t(a);
      e.c = 1;
      tag.push_back(e);
    }
    int sug = detail::max_term_degree(gens[a]) +
              (gens[a].front().comp < int(shifts.size())
                   ? shifts[gens[a].front().comp]
                   : 0);
    add_element(gens[a], std::move(tag), sug);
  }

  while (!pairs.empty()) {
    detail::poll_deadline();
    detail::SPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    if (opt.degree_bound >= 0 && p.pdeg > opt.degree_bound) {
      res.truncated = true;
      continue;
    }
    // Chain criterion: some lead divides the lcm and both companion pairs
    // were already processed.
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (int(k) == p.i || int(k) == p.j || basis[k].empty()) continue;
      const MTerm& lk = basis[k].front();
      if (lk.comp != basis[p.i].front().comp) continue;
      if (!divides(lk.m, p.lcm, nv)) continue;
      auto key1 = std::make_pair(std::min(int(k), p.i), std::max(int(k), p.i));
      auto key2 = std::make_pair(std::min(int(k), p.j), std::max(int(k), p.j));
      if (done.count(key1) && done.count(key2)) skip = true;
    }
    done.insert({p.i, p.j});
    if (skip) continue;

    const MPoly& gi = basis[p.i];
    const MPoly& gj = basis[p.j];
    Expo ui = mono_div(p.lcm, gi.front().m, nv);
    Expo uj = mono_div(p.lcm, gj.front().m, nv);
    int di = total_degree(ui, nv), dj = total_degree(uj, nv);
    MPoly s = mpoly_mul_mono(R, gi, 1, ui, di);
    mpoly_sub_mul(R, s, 1, uj, dj, gj);

    MPoly q;
    MPoly rem = module_normal_form(R, std::move(s), basis, &q);
    if (rem.empty()) continue;

    int sug = p.sugar;
    for (const auto& t : q) sug = std::max(sug, sugar[t.comp] + int(t.deg));
    MPoly tag;
    if (opt.want_tags) {
      // tag(s-vector) minus the quotient combination of the reducers' tags,
      // assembled in one pass and normalized once.
      tag = mpoly_mul_mono(R, tags[p.i], 1, ui, di);
      size_t total = tag.size() + tags[p.j].size();
      for (const auto& t : q) total += tags[t.comp].size();
      tag.reserve(total);
      for (const auto& s : tags[p.j]) {
        MTerm o = s;
        o.m = mono_mul(s.m, uj, nv);
        o.deg = s.deg + dj;
        o.c = R.field().neg(s.c);
        tag.push_back(o);
      }
      for (const auto& t : q) {
        int64_t nc = R.field().neg(t.c);
        for (const auto& s : tags[t.comp]) {
          MTerm o = s;
          o.m = mono_mul(s.m, t.m, nv);
          o.deg = s.deg + t.deg;
          o.c = R.field().mul(s.c, nc);
          tag.push_back(o);
        }
      }
      mpoly_normalize(R, tag);
    }
    add_element(std::move(rem), std::move(tag), sug);
  }

  if (opt.interreduce) {
    // Keep only elements with divisibility-minimal leads (prefer earlier
    // elements on equal leads), then tail-reduce each against the rest.
    std::vector<char> keep(basis.size(), 1);
    for (size_t a = 0; a < basis.size(); ++a) {
      if (!keep[a]) continue;
      for (size_t b = 0; b < basis.size(); ++b) {
        if (a == b || !keep[b]) continue;
        const MTerm& la = basis[a].front();
        const MTerm& lb = basis[b].front();
        if (la.comp != lb.comp) continue;
        if (divides(lb.m, la.m, nv) && !(lb.m == la.m && b > a)) {
          keep[a] = 0;
          break;
        }
      }
    }
    std::vector<MPoly> kept, kept_tags;
    std::vector<size_t> kept_idx;
    for (size_t a = 0; a < basis.size(); ++a)
      if (keep[a]) kept_idx.push_back(a);
    // Deterministic order: ascending lead (then component).
    std::sort(kept_idx.begin(), kept_idx.end(), [&](size_t a, size_t b) {
      return term_cmp(R, basis[a].front(), basis[b].front()) < 0;
    });
    for (size_t a : kept_idx) {
      kept.push_back(std::move(basis[a]));
      if (opt.want_tags) kept_tags.push_back(std::move(tags[a]));
    }
    basis = std::move(kept);
    tags = std::move(kept_tags);
    // Tail-reduce each element against the whole set. A tail term is never
    // divisible by the element's own lead (it sorts strictly below it), so
    // the element can safely stay in the reducer list.
    for (size_t a = 0; a < basis.size(); ++a) {
      MPoly lead{basis[a].front()};
      MPoly tail(basis[a].begin() + 1, basis[a].end());
      MPoly q;
      MPoly red = module_normal_form(R, std::move(tail), basis,
                                     opt.want_tags ? &q : nullptr);
      basis[a] = mpoly_add(R, lead, red);
      if (opt.want_tags && !q.empty()) {
        MPoly& ta = tags[a];
        size_t total = ta.size();
        for (const auto& t : q) total += tags[t.comp].size();
        ta.reserve(total);
        for (const auto& t : q) {
          int64_t nc = R.field().neg(t.c);
          for (const auto& s : tags[t.comp]) {
            MTerm o = s;
            o.m = mono_mul(s.m, t.m, nv);
            o.deg = s.deg + t.deg;
            o.c = R.field().mul(s.c, nc);
            ta.push_back(o);
          }
        }
        mpoly_normalize(R, ta);
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Ideal-level interface with caching.

struct GroebnerData {
  std::vector<Polynomial> basis;  // reduced basis, monic, ascending leads
  bool truncated = false;
};

inline GroebnerData groebner_basis_nocache(const Ideal& I,
                                           int degree_bound = -1) {
  std::vector<MPoly> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(g.terms());
  ModGBOptions opt;
  opt.degree_bound = degree_bound;
  ModGBResult r = module_groebner(I.ring(), std::move(gens), 1, {0}, opt);
  GroebnerData out;
  out.truncated = r.truncated;
  for (auto& b : r.basis) out.basis.emplace_back(I.ring(), std::move(b));
  return out;
}

inline const GroebnerData& groebner_basis(const Ideal& I) {
  auto& slot = I.cache()->gb;
  if (!slot) slot = std::make_shared<GroebnerData>(groebner_basis_nocache(I));
  return *slot;
}

inline Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  if (f.ring().get() != I.ring().get())
    throw Error("normal form: element of the wrong ring");
  const GroebnerData& gb = groebner_basis(I);
  std::vector<MPoly> basis;
  basis.reserve(gb.basis.size());
  for (const auto& b : gb.basis) basis.push_back(b.terms());
  MPoly rem = module_normal_form(*I.ring(), f.terms(), basis);
  return Polynomial(I.ring(), std::move(rem));
}

inline bool ideal_contains(const Ideal& I, const Polynomial& f) {
  return normal_form(f, I).is_zero();
}

inline bool ideal_is_unit(const Ideal& I) {
  const auto& gb = groebner_basis(I).basis;
  return gb.size() == 1 && gb[0].size() == 1 &&
         is_one(gb[0].lead().m, I.ring()->nvars());
}

}  // namespace reeslab
