#pragma once
// Affine charts: set one variable to 1 and drop it. The x-grading does not
// survive (the chart ring is ungraded); any t-grading data is carried along
// for bookkeeping only.

#include <string>
#include <vector>

#include "ideal.hpp"
#include "polynomial.hpp"
#include "ring.hpp"

namespace reeslab {

struct Chart {
  RingPtr source;
  RingPtr ring;              // ungraded, with the chosen variable removed
  int var = -1;              // source index of the variable set to one
  std::vector<int> var_map;  // source index -> chart index, -1 at `var`
};

inline Chart chart_at(const RingPtr& src, int var) {
  if (var < 0 || var >= src->nvars()) throw Error("chart_at: no such variable");
  if (src->nvars() < 2)
    throw Error("chart_at: need a variable left after the chart");
  Chart ch;
  ch.source = src;
  ch.var = var;
  ch.var_map.assign(size_t(src->nvars()), -1);
  std::vector<std::string> names;
  std::vector<Bideg> degs;
  for (int i = 0; i < src->nvars(); ++i) {
    if (i == var) continue;
    ch.var_map[size_t(i)] = int(names.size());
    names.push_back(src->var_name(i));
    degs.push_back(Bideg{0, src->var_bideg(i).t});
  }
  ch.ring = make_chart_ring(src->field().p(), std::move(names), std::move(degs));
  return ch;
}

inline Polynomial dehomogenize(const Chart& ch, const Polynomial& f) {
  if (f.ring().get() != ch.source.get())
    throw Error("dehomogenize: polynomial from a different ring");
  const PolyRing& D = *ch.ring;
  MPoly out;
  for (const auto& t : f.terms()) {
    Expo m;
    for (int i = 0; i < ch.source->nvars(); ++i)
      if (i != ch.var && t.m[i]) m[ch.var_map[size_t(i)]] = t.m[i];
    out.push_back(make_term(D, m, 0, t.c));
  }
  mpoly_normalize(D, out);
  return Polynomial(ch.ring, std::move(out));
}

inline Ideal dehomogenize(const Chart& ch, const Ideal& I) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(dehomogenize(ch, g));
  return Ideal(ch.ring, std::move(gens));
}

}  // namespace reeslab
