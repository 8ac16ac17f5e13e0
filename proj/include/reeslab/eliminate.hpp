#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reeslab/buchberger.hpp"
#include "reeslab/ideal.hpp"
#include "reeslab/ring_map.hpp"

namespace reeslab {

// Re-express f in ring B, sending variable i of f's ring to variable
// var_map[i] of B. Pure index remapping: cheap, exact, no arithmetic.
inline Polynomial transport_poly(const Polynomial& f, const RingPtr& B,
                                 const std::vector<int>& var_map) {
  const PolyRing& A = *f.ring();
  MPoly out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    MTerm s;
    s.comp = t.comp;
    s.c = t.c;
    for (int i = 0; i < A.nvars(); ++i)
      if (t.m.e[i] != 0) {
        if (var_map[i] < 0)
          throw Error("transport: monomial uses a dropped variable");
        s.m.e[var_map[i]] = int16_t(s.m.e[var_map[i]] + t.m.e[i]);
      }
    s.deg = t.deg;
    out.push_back(s);
  }
  mpoly_normalize(*B, out);
  return Polynomial(B, std::move(out));
}

struct EliminationResult {
  RingPtr ring;  // ring on the kept variables, original relative order
  Ideal ideal;   // I intersected with the subring of kept variables
  std::vector<int> kept;  // kept variable indices in the source ring
};

// Intersect I with the polynomial subring on the complement of drop_vars.
// Internally uses a block (elimination) order with the dropped variables in
// front; by the elimination property the basis elements free of dropped
// variables form a basis of the intersection.
inline EliminationResult eliminate(const Ideal& I,
                                   const std::vector<int>& drop_vars) {
  const RingPtr& R = I.ring();
  const int nv = R->nvars();
  std::set<int> drop(drop_vars.begin(), drop_vars.end());
  for (int d : drop)
    if (d < 0 || d >= nv) throw Error("eliminate: variable index out of range");

  std::vector<int> kept;
  for (int i = 0; i < nv; ++i)
    if (!drop.count(i)) kept.push_back(i);

  // Permuted ring: dropped variables first, block split after them.
  std::vector<std::string> pnames;
  std::vector<Bideg> pdegs;
  std::vector<int> to_perm(nv, -1);
  for (int d : drop) {
    to_perm[d] = int(pnames.size());
    pnames.push_back(R->var_name(d));
    pdegs.push_back(R->var_bideg(d));
  }
  for (int k : kept) {
    to_perm[k] = int(pnames.size());
    pnames.push_back(R->var_name(k));
    pdegs.push_back(R->var_bideg(k));
  }
  RingPtr Rp = R->graded()
                   ? make_ring(R->field().p(), pnames, pdegs,
                               MonomialOrder::make_block(int(drop.size())))
                   : make_chart_ring(R->field().p(), pnames, pdegs,
                                     MonomialOrder::make_block(int(drop.size())));

  std::vector<Polynomial> pgens;
  for (const auto& g : I.gens()) pgens.push_back(transport_poly(g, Rp, to_perm));
  Ideal Ip(Rp, std::move(pgens));
  const auto& gb = groebner_basis(Ip).basis;

  // Ring on the kept variables, original order among themselves.
  std::vector<std::string> knames;
  std::vector<Bideg> kdegs;
  for (int k : kept) {
    knames.push_back(R->var_name(k));
    kdegs.push_back(R->var_bideg(k));
  }
  RingPtr Rk = R->graded() ? make_ring(R->field().p(), knames, kdegs)
                           : make_chart_ring(R->field().p(), knames, kdegs);

  std::vector<int> perm_to_kept(nv, -1);
  for (size_t a = 0; a < kept.size(); ++a)
    perm_to_kept[to_perm[kept[a]]] = int(a);

  std::vector<Polynomial> out;
  const int ndrop = int(drop.size());
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& t : g.terms())
      for (int i = 0; i < ndrop && pure; ++i)
        if (t.m.e[i] != 0) pure = false;
    if (pure) out.push_back(transport_poly(g, Rk, perm_to_kept));
  }
  EliminationResult res;
  res.ring = Rk;
  res.ideal = Ideal(Rk, std::move(out));
  res.kept = kept;
  return res;
}

// Kernel of a ring homomorphism phi : S -> T/target_rels, returned as an
// ideal of S. Graph construction: adjoin fresh copies of the S variables to
// T, impose copy_i - phi(s_i) together with the target relations, eliminate
// the T variables.
inline Ideal kernel_of_map(const RingMap& phi, const Ideal& target_rels) {
  const RingPtr& S = phi.src();
  const RingPtr& T = phi.dst();
  if (target_rels.ring() != T)
    throw Error("kernel: relations do not live in the target ring");
  const int nS = S->nvars(), nT = T->nvars();
  if (nS + nT > kMaxVars)
    throw Error("kernel computation exceeds the variable limit");

  std::vector<std::string> gnames;
  std::vector<Bideg> gdegs;
  for (int i = 0; i < nT; ++i) {
    gnames.push_back(T->var_name(i) + "~g");
    gdegs.push_back(T->var_bideg(i));
  }
  for (int i = 0; i < nS; ++i) {
    gnames.push_back(S->var_name(i));
    gdegs.push_back(S->var_bideg(i));
  }
  bool graded = S->graded() && T->graded();
  RingPtr G = graded ? make_ring(S->field().p(), gnames, gdegs)
                     : make_chart_ring(S->field().p(), gnames, gdegs);

  std::vector<int> t_to_g(nT), s_to_g(nS);
  for (int i = 0; i < nT; ++i) t_to_g[i] = i;
  for (int i = 0; i < nS; ++i) s_to_g[i] = nT + i;

  std::vector<Polynomial> graph;
  for (const auto& r : target_rels.gens())
    graph.push_back(transport_poly(r, G, t_to_g));
  for (int i = 0; i < nS; ++i) {
    Polynomial copy = Polynomial::variable(G, nT + i);
    Polynomial img = transport_poly(phi.images()[i], G, t_to_g);
    graph.push_back(poly_sub(copy, img));
  }
  std::vector<int> drop(nT);
  for (int i = 0; i < nT; ++i) drop[i] = i;
  EliminationResult elim = eliminate(Ideal(G, std::move(graph)), drop);

  // elim.ring variables are exactly the S variables in order.
  std::vector<int> back(nS);
  for (int i = 0; i < nS; ++i) back[i] = i;
  std::vector<Polynomial> out;
  for (const auto& g : elim.ideal.gens())
    out.push_back(transport_poly(g, S, back));
  return Ideal(S, std::move(out));
}

// Kernel of phi : S -> T with a free target.
inline Ideal kernel_of_map(const RingMap& phi) {
  return kernel_of_map(phi, Ideal(phi.dst(), {}));
}

}  // namespace reeslab
