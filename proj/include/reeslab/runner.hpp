#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "reeslab/a_invariants.hpp"
#include "reeslab/calibration.hpp"
#include "reeslab/canonical.hpp"
#include "reeslab/cm_certificate.hpp"
#include "reeslab/deadline.hpp"
#include "reeslab/epsilon.hpp"
#include "reeslab/report.hpp"
#include "reeslab/verdict.hpp"

namespace reeslab {

namespace detail {

// Shared state for one job run: the ring and ideals are built once, the
// blow-up instance and its presentation lazily and memoized (including a
// sticky construction error, so every dependent task reports the same
// diagnostic).
struct JobContext {
  const JobSpec& spec;
  RingPtr R;
  Ideal rels;
  Ideal ideal;
  std::optional<BlowupInstance> blowup;
  std::optional<ReesPresentation> rees;
  std::string blowup_error;

  explicit JobContext(const JobSpec& s, const MonomialOrder& order)
      : spec(s) {
    R = make_ring(s.characteristic, s.variables, {}, order);
    std::vector<Polynomial> rp, gp;
    for (const auto& t : s.relations) rp.push_back(parse_poly(R, t));
    for (const auto& t : s.generators) gp.push_back(parse_poly(R, t));
    rels = Ideal(R, std::move(rp));
    ideal = Ideal(R, std::move(gp));
  }

  const Ideal* rels_or_null() const {
    return rels.gens().empty() ? nullptr : &rels;
  }

  const BlowupInstance& require_blowup() {
    if (!blowup_error.empty()) throw Error(blowup_error);
    if (!blowup) {
      if (!spec.has_ideal || ideal.gens().empty())
        throw Error("this task needs an ideal block with generators");
      try {
        blowup = make_blowup(R, rels, ideal, "job");
      } catch (const Error& e) {
        blowup_error = e.what();
        throw;
      }
    }
    return *blowup;
  }

  const ReesPresentation& require_rees() {
    if (!rees) rees = rees_presentation(require_blowup());
    return *rees;
  }
};

// Cohen-Macaulay values for a quotient, with the certificate's witnesses
// when the resolution-free route applies (mirrors is_cm_graded_quotient's
// dispatch, but keeps multiplicity and colength for the report).
inline Json cm_values(const Ideal& I) {
  Json v;
  if (I.ring()->nvars() >= 9) {
    std::optional<ParamCMReport> p = is_cm_by_parameters(I);
    if (p) {
      v["cm"] = p->cm;
      v["dim"] = p->dim;
      if (p->cm)
        v["depth"] = p->dim;
      else
        v["depth"] = nullptr;  // the certificate refutes without a depth
      v["multiplicity"] = p->multiplicity;
      v["colength"] = p->colength;
      v["route"] = "multiplicity_certificate";
      return v;
    }
  }
  CMReport r = is_cm_graded(presentation_of_quotient(I));
  v["cm"] = r.cm;
  v["dim"] = r.dim;
  v["depth"] = r.depth;
  v["route"] = "duality";
  return v;
}

inline Json epsilon_values(const EpsilonEstimate& E) {
  Json v;
  v["n_max"] = E.n_max;
  v["window"] = E.window;
  v["d"] = E.d;
  v["estimate"] = E.estimate;
  v["stabilized"] = E.stabilized;
  Json entries = Json::array();
  for (const auto& en : E.entries) {
    Json e;
    e["n"] = en.n;
    e["value"] = en.value ? Json(*en.value) : Json(nullptr);
    e["slack"] = en.slack ? Json(*en.slack) : Json(nullptr);
    entries.push_back(e);
  }
  v["entries"] = entries;
  return v;
}

inline Json run_one_task(JobContext& ctx, const JobTask& t) {
  const JobLimits& lim = ctx.spec.limits;
  if (t.op == "dim_base") {
    std::optional<int> d = krull_dim(hilbert_series_of_quotient(ctx.rels));
    if (!d) throw Error("the base ring is zero");
    return Json{{"dim", *d}};
  }
  if (t.op == "a_star_base") {
    std::optional<int> v = a_invariants_of_quotient(ctx.rels).a_star();
    if (!v) throw Error("the base ring is zero");
    return Json{{"a_star", *v}};
  }
  if (t.op == "max_gen_degree") {
    ctx.require_blowup();
    std::vector<Polynomial> gens =
        minimal_generators(ctx.ideal, ctx.rels_or_null());
    Json degs = Json::array();
    int d = 0;
    for (const auto& g : gens) {
      int gd = g.bideg()->x;
      degs.push_back(gd);
      d = std::max(d, gd);
    }
    return Json{{"d", d}, {"gen_degrees", degs}};
  }
  if (t.op == "a_star_power") {
    int n = int(t.args[0]);
    return Json{{"n", n}, {"a_star", a_star_of_power(ctx.require_blowup(), n)}};
  }
  if (t.op == "epsilon")
    return epsilon_values(epsilon_estimator(ctx.require_blowup(),
                                            int(t.args[0]), int(t.args[1])));
  if (t.op == "epsilon_star")
    return epsilon_values(epsilon_star_estimator(
        ctx.require_rees(), int(t.args[0]), int(t.args[1])));
  if (t.op == "rees_cm") {
    const ReesPresentation& S = ctx.require_rees();
    Json v = cm_values(S.ideal);
    v["fiber_vars"] = S.fiber_vars;
    v["presentation_rels"] = int(S.ideal.gens().size());
    return v;
  }
  if (t.op == "locally_cm") {
    LocalCMReport rep = locally_cm_on_proj(ctx.require_rees());
    Json charts = Json::array();
    for (const auto& ch : rep.charts) {
      Json c;
      c["chart"] = ch.chart_var;
      c["cm"] = ch.report.cm;
      c["codim"] = ch.report.codim;
      c["nonvanishing_ext"] = ch.report.nonvanishing;
      charts.push_back(c);
    }
    return Json{{"locally_cm", rep.all_cm}, {"charts", charts}};
  }
  if (t.op == "diagonal_cm") {
    DiagonalPresentation D =
        diagonal_presentation(ctx.require_blowup(), int(t.args[0]),
                              int(t.args[1]));
    Json v = cm_values(D.ideal);
    v["e"] = int(t.args[0]);
    v["c"] = int(t.args[1]);
    v["algebra_gens"] = int(D.images.size());
    return v;
  }
  if (t.op == "truncated_rees_cm") {
    ReesPresentation T = truncated_rees_presentation(
        ctx.require_blowup(), int(t.args[0]), int(t.args[1]));
    Json v = cm_values(T.ideal);
    v["e"] = int(t.args[0]);
    v["c"] = int(t.args[1]);
    v["fiber_vars"] = T.fiber_vars;
    return v;
  }
  if (t.op == "canonical_strands") {
    int n_max = int(t.args[0]);
    std::optional<ReesPresentation> local;
    const ReesPresentation* S = nullptr;
    if (!t.polys.empty()) {
      std::vector<Polynomial> fp;
      for (const auto& s : t.polys) fp.push_back(parse_poly(ctx.R, s));
      local = rees_presentation(ctx.require_blowup(), Ideal(ctx.R, fp));
      S = &*local;
    } else {
      S = &ctx.require_rees();
    }
    CanonicalModule W = canonical_module_rees(*S);
    Json strands = Json::array();
    for (int n = 1; n <= n_max; ++n) {
      ModMatrix wn = canonical_strand(*S, W, n);
      AInvariants A = a_invariants(wn);
      std::optional<int> a_ge2;
      for (size_t i = 2; i < A.a.size(); ++i)
        if (A.a[i] && (!a_ge2 || *A.a[i] > *a_ge2)) a_ge2 = *A.a[i];
      Json hf = Json::array();
      for (int x = 0; x <= lim.degree_bound; ++x)
        hf.push_back(hilbert_function(wn, Bideg{x, 0}));
      Json s;
      s["n"] = n;
      s["gens"] = wn.nrows();
      s["dim"] = A.dim;
      s["depth"] = A.depth;
      s["a_ge2"] = a_ge2 ? Json(*a_ge2) : Json(nullptr);
      s["hilbert"] = hf;
      strands.push_back(s);
    }
    return Json{{"fiber_vars", S->fiber_vars},
                {"codim", W.codim},
                {"strands", strands}};
  }
  if (t.op == "verdict") {
    VerdictTarget target = t.target == "diagonal"
                               ? VerdictTarget::diagonal
                               : VerdictTarget::truncated_rees;
    TheoremVerdict V =
        theorem_verdict(ctx.require_blowup(), int(t.args[0]), int(t.args[1]),
                        target, lim.n_max, lim.window);
    Json hyps = Json::array();
    for (const auto& h : V.hypotheses) {
      Json hj;
      hj["name"] = h.name;
      hj["required"] = h.required;
      hj["certified"] = h.certified;
      hj["note"] = h.note;
      hyps.push_back(hj);
    }
    Json v;
    v["target"] = to_string(V.target);
    v["e"] = V.e;
    v["c"] = V.c;
    v["d"] = V.d;
    v["epsilon"] = V.epsilon;
    v["epsilon_star"] = V.epsilon_star;
    v["e0_upper"] = V.e0_upper;
    v["base_a_star"] = V.base_a_star;
    v["locally_cm"] = V.locally_cm;
    v["hypotheses"] = hyps;
    v["hypotheses_met"] = V.hypotheses_met;
    v["predicted_cm"] = V.predicted_cm;
    v["computed_cm"] = V.computed.cm;
    v["computed_dim"] = V.computed.dim;
    v["agreement"] = V.agreement;
    return v;
  }
  throw Error("unknown task operation: " + t.op);
}

}  // namespace detail

// Executes a validated job. Calibration runs first and a failure there
// aborts the whole job (CalibrationError propagates); task failures are
// isolated per task. Tasks execute sequentially in input order, which
// keeps reports deterministic.
inline ReportDocument run_job(
    const JobSpec& spec,
    MonomialOrder order = MonomialOrder::make_degrevlex()) {
  ReportDocument doc;
  doc.characteristic = spec.characteristic;
  doc.order_name = order.name();
  doc.calibration = ensure_calibrated(spec.characteristic);
  doc.job = spec;

  detail::JobContext ctx(spec, order);
  int id = 0;
  for (const auto& t : spec.tasks) {
    TaskOutcome out;
    out.id = "t" + std::to_string(++id);
    out.op = t.op;
    auto t0 = std::chrono::steady_clock::now();
    try {
      DeadlineGuard guard(spec.limits.time_budget);
      out.values = detail::run_one_task(ctx, t);
      out.status = "ok";
    } catch (const TimeBudgetExceeded&) {
      out.status = "skipped";
      out.message = "time budget exceeded";
    } catch (const Error& e) {
      out.status = "error";
      out.message = e.what();
    }
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    doc.tasks.push_back(std::move(out));
  }
  return doc;
}

inline ReportDocument run_job_text(
    const std::string& text,
    MonomialOrder order = MonomialOrder::make_degrevlex()) {
  return run_job(parse_job(text), order);
}

}  // namespace reeslab
