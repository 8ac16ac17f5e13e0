#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "reeslab/canonical.hpp"

namespace reeslab {

// One sampled power: the measured invariant and its slack against the
// linear growth d * n set by the generator degree scale.
struct EpsilonEntry {
  int n = 0;
  std::optional<int> value;
  std::optional<int> slack;
};

struct EpsilonEstimate {
  int d = 0;
  int n_max = 0;
  int window = 0;
  std::vector<EpsilonEntry> entries;
  int estimate = 0;        // max(0, largest observed slack)
  bool stabilized = false;  // slack constant across the trailing window
};

namespace detail {

inline void finish_epsilon(EpsilonEstimate& E) {
  int best = 0;
  for (const auto& en : E.entries)
    if (en.slack) best = std::max(best, *en.slack);
  E.estimate = best;
  E.stabilized = false;
  if (int(E.entries.size()) >= E.window && E.window >= 1) {
    E.stabilized = true;
    const auto& last = E.entries[E.entries.size() - 1].slack;
    for (int k = 1; k <= E.window; ++k) {
      const auto& s = E.entries[E.entries.size() - size_t(k)].slack;
      if (!s || !last || *s != *last) E.stabilized = false;
    }
  }
}

}  // namespace detail

// Slack of a^*(I^n) against d(I) * n over n = 1..n_max.
inline EpsilonEstimate epsilon_estimator(const BlowupInstance& B,
                                         int n_max = 4, int window = 3) {
  if (n_max < 1) throw Error("epsilon estimator: need at least one power");
  if (window < 1) throw Error("epsilon estimator: window must be positive");
  EpsilonEstimate E;
  E.d = max_gen_degree(B.ideal, B.rels_or_null());
  E.n_max = n_max;
  E.window = window;
  for (int n = 1; n <= n_max; ++n) {
    int a = a_star_of_power(B, n);
    E.entries.push_back({n, a, a - E.d * n});
  }
  detail::finish_epsilon(E);
  return E;
}

// Slack of the canonical-strand invariants against d(I) * n. Only local
// cohomology in degrees two and higher participates; strands whose duals
// all sit below that contribute no slack.
inline EpsilonEstimate epsilon_star_estimator(const ReesPresentation& S,
                                              int n_max = 4, int window = 3) {
  if (n_max < 1) throw Error("epsilon estimator: need at least one power");
  if (window < 1) throw Error("epsilon estimator: window must be positive");
  EpsilonEstimate E;
  E.d = max_gen_degree(S.blowup.ideal, S.blowup.rels_or_null());
  E.n_max = n_max;
  E.window = window;
  CanonicalModule W = canonical_module_rees(S);
  for (int n = 1; n <= n_max; ++n) {
    ModMatrix piece = canonical_strand(S, W, n);
    EpsilonEntry en;
    en.n = n;
    if (piece.nrows() > 0) {
      AInvariants A = a_invariants(piece);
      std::optional<int> v;
      for (size_t i = 2; i < A.a.size(); ++i)
        if (A.a[i] && (!v || *A.a[i] > *v)) v = A.a[i];
      en.value = v;
      if (v) en.slack = *v - E.d * n;
    }
    E.entries.push_back(en);
  }
  detail::finish_epsilon(E);
  return E;
}

inline EpsilonEstimate epsilon_star_estimator(const BlowupInstance& B,
                                              int n_max = 4, int window = 3) {
  return epsilon_star_estimator(rees_presentation(B), n_max, window);
}

}  // namespace reeslab
