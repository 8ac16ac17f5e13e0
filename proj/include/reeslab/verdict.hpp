#pragma once

#include <string>
#include <vector>

#include "reeslab/epsilon.hpp"

namespace reeslab {

enum class VerdictTarget { diagonal, truncated_rees };

inline const char* to_string(VerdictTarget t) {
  return t == VerdictTarget::diagonal ? "diagonal" : "truncated_rees";
}

struct HypothesisCheck {
  std::string name;
  bool required = true;
  bool certified = false;
  std::string note;
};

// Outcome of the sufficiency test for one (e, c) pair: every hypothesis is
// evaluated, the prediction fires only when all required ones certify, and
// the target algebra is always tested directly so that the two answers can
// be compared.
struct TheoremVerdict {
  VerdictTarget target = VerdictTarget::diagonal;
  int e = 1;
  int c = 0;
  int d = 0;
  int epsilon = 0;
  int epsilon_star = 0;
  int e0_upper = 0;
  int base_a_star = 0;
  bool locally_cm = false;
  std::vector<HypothesisCheck> hypotheses;
  bool hypotheses_met = false;
  bool predicted_cm = false;
  CMReport computed;
  bool agreement = true;  // predicted_cm implies computed.cm
};

inline TheoremVerdict theorem_verdict(const BlowupInstance& B, int e, int c,
                                      VerdictTarget target, int n_max = 4,
                                      int window = 3) {
  if (e < 1) throw Error("verdict: the power must be positive");
  TheoremVerdict V;
  V.target = target;
  V.e = e;
  V.c = c;
  V.d = max_gen_degree(B.ideal, B.rels_or_null());
  V.base_a_star = base_a_star(B);

  ReesPresentation S = rees_presentation(B);
  LocalCMReport loc = locally_cm_on_proj(S);
  V.locally_cm = loc.all_cm;
  V.e0_upper = 0;
  if (!loc.all_cm)
    V.e0_upper = std::max(rees_t_grading_a_star(S, ReesModule::structure),
                          rees_t_grading_a_star(S, ReesModule::canonical));

  EpsilonEstimate eps = epsilon_estimator(B, n_max, window);
  EpsilonEstimate eps_star = epsilon_star_estimator(S, n_max, window);
  V.epsilon = eps.estimate;
  V.epsilon_star = eps_star.estimate;

  auto add = [&](const std::string& name, bool required, bool certified,
                 std::string note) {
    V.hypotheses.push_back({name, required, certified, std::move(note)});
  };
  add("base_a_star_negative", target == VerdictTarget::truncated_rees,
      V.base_a_star < 0,
      "a*(base) = " + std::to_string(V.base_a_star));
  add("power_bound", true, e > V.e0_upper,
      "needs e > " + std::to_string(V.e0_upper) +
          (V.locally_cm ? " (locally CM blow-up)" : " (fiber-degree bound)"));
  int needed = V.d * e + std::max(V.epsilon, V.epsilon_star);
  add("slice_degree_bound", true, c > needed,
      "needs c > " + std::to_string(needed) + " (epsilon " +
          std::to_string(V.epsilon) + ", epsilon* " +
          std::to_string(V.epsilon_star) +
          (eps.stabilized && eps_star.stabilized
               ? ", both stabilized)"
               : ", estimator window still moving)"));

  V.hypotheses_met = true;
  for (const auto& h : V.hypotheses)
    if (h.required && !h.certified) V.hypotheses_met = false;
  V.predicted_cm = V.hypotheses_met;

  if (target == VerdictTarget::diagonal) {
    DiagonalPresentation D = diagonal_presentation(B, e, c);
    V.computed = is_cm_graded_quotient(D.ideal);
  } else {
    ReesPresentation T = truncated_rees_presentation(B, e, c);
    V.computed = is_cm_graded_quotient(T.ideal);
  }
  V.agreement = !V.predicted_cm || V.computed.cm;
  return V;
}

}  // namespace reeslab
