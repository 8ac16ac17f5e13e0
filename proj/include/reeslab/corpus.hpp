#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "reeslab/a_invariants.hpp"
#include "reeslab/deadline.hpp"
#include "reeslab/report.hpp"
#include "reeslab/verdict.hpp"

namespace reeslab {

// Randomized battery over small monomial ideals. Every row runs the same
// audit: regularity through two independent routes (any disagreement is a
// hard error inside regularity_of_quotient), the Cohen-Macaulay test on the
// blow-up algebra, the t-grading invariants that a CM blow-up algebra must
// satisfy (structure sheaf -1, canonical module 0), and a soundness check
// of the prediction engine against the computed answer.
struct CorpusParams {
  int nvars = 3;
  int max_degree = 4;
  int count = 20;
  std::uint64_t seed = 1;
  std::int64_t characteristic = 101;
  double time_budget = 300.0;
};

struct CorpusRow {
  int index = 0;
  std::string ideal_text;
  std::string status;  // "ok" | "skipped" | "error"
  std::string message;
  int reg = 0;
  bool reg_checked = false;
  int d = 0;
  bool rees_cm = false;
  int rees_dim = -1;
  std::optional<int> t_structure;  // only on CM rows
  std::optional<int> t_canonical;  // only on CM rows
  bool lemma_ok = true;
  bool verdict_applicable = false;
  bool verdict_sound = true;
  double seconds = 0;
};

struct CorpusSummary {
  CorpusParams params;
  CalibrationRecord calibration;
  std::vector<CorpusRow> rows;

  int ok = 0;
  int skipped = 0;
  int errors = 0;
  int reg_agreements = 0;
  int cm_hits = 0;
  int lemma_checks = 0;
  int lemma_violations = 0;
  int verdict_rows = 0;
  int verdict_applicable = 0;
  int soundness_violations = 0;

  bool clean() const {
    return errors == 0 && lemma_violations == 0 && soundness_violations == 0;
  }
};

namespace detail {

// All instances are drawn up front from one generator, so a slow row that
// gets skipped cannot shift which ideals later rows receive.
inline std::vector<std::vector<std::string>> corpus_instances(
    const CorpusParams& P) {
  std::mt19937_64 rng(P.seed);
  std::vector<std::vector<std::string>> all;
  for (int i = 0; i < P.count; ++i) {
    int ngens = 3 + int(rng() % 3);
    std::set<std::vector<int>> expos;
    for (int g = 0; g < ngens; ++g) {
      int deg = 2 + int(rng() % std::uint64_t(std::max(1, P.max_degree - 1)));
      std::vector<int> e(size_t(P.nvars), 0);
      for (int k = 0; k < deg; ++k) e[size_t(rng() % std::uint64_t(P.nvars))]++;
      expos.insert(e);
    }
    // Drop generators divisible by another generator.
    std::vector<std::vector<int>> minimal;
    for (const auto& e : expos) {
      bool redundant = false;
      for (const auto& f : expos) {
        if (f == e) continue;
        bool divides = true;
        for (int v = 0; v < P.nvars; ++v)
          if (f[size_t(v)] > e[size_t(v)]) divides = false;
        if (divides) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(e);
    }
    std::vector<std::string> gens;
    for (const auto& e : minimal) {
      std::string s;
      for (int v = 0; v < P.nvars; ++v) {
        if (e[size_t(v)] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(v + 1);
        if (e[size_t(v)] > 1) s += "^" + std::to_string(e[size_t(v)]);
      }
      gens.push_back(s.empty() ? "1" : s);
    }
    all.push_back(gens);
  }
  return all;
}

inline std::string join(const std::vector<std::string>& xs,
                        const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

}  // namespace detail

inline CorpusSummary run_corpus(const CorpusParams& P) {
  CorpusSummary sum;
  sum.params = P;
  sum.calibration = ensure_calibrated(P.characteristic);

  std::vector<std::string> names;
  for (int v = 1; v <= P.nvars; ++v) names.push_back("x" + std::to_string(v));
  RingPtr R = make_ring(P.characteristic, names);

  std::vector<std::vector<std::string>> instances = detail::corpus_instances(P);
  for (int i = 0; i < int(instances.size()); ++i) {
    CorpusRow row;
    row.index = i + 1;
    row.ideal_text = detail::join(instances[size_t(i)], ", ");
    auto t0 = std::chrono::steady_clock::now();
    try {
      DeadlineGuard guard(P.time_budget);
      std::vector<Polynomial> gens;
      for (const auto& s : instances[size_t(i)])
        gens.push_back(parse_poly(R, s));
      Ideal I(R, std::move(gens));

      RegularityReport reg = regularity_of_quotient(I);
      row.reg = reg.value;
      row.reg_checked = reg.checked_against_betti;

      BlowupInstance B = make_blowup(R, Ideal(), I);
      row.d = max_gen_degree(B.ideal, B.rels_or_null());

      ReesPresentation S = rees_presentation(B);
      CMReport cm = is_cm_graded_quotient(S.ideal);
      row.rees_cm = cm.cm;
      row.rees_dim = cm.dim;
      if (cm.cm) {
        row.t_structure = rees_t_grading_a_star(S, ReesModule::structure);
        row.t_canonical = rees_t_grading_a_star(S, ReesModule::canonical);
        row.lemma_ok = (*row.t_structure == -1 && *row.t_canonical == 0);
      }

      TheoremVerdict V = theorem_verdict(B, 1, row.d + 1,
                                         VerdictTarget::truncated_rees);
      row.verdict_applicable = V.hypotheses_met;
      row.verdict_sound = !V.hypotheses_met || V.agreement;

      row.status = "ok";
    } catch (const TimeBudgetExceeded&) {
      row.status = "skipped";
      row.message = "time budget exceeded";
    } catch (const Error& e) {
      row.status = "error";
      row.message = e.what();
    }
    row.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    if (row.status == "ok") {
      sum.ok++;
      if (row.reg_checked) sum.reg_agreements++;
      if (row.rees_cm) {
        sum.cm_hits++;
        sum.lemma_checks += 2;
        if (!row.lemma_ok) sum.lemma_violations++;
      }
      sum.verdict_rows++;
      if (row.verdict_applicable) sum.verdict_applicable++;
      if (!row.verdict_sound) sum.soundness_violations++;
    } else if (row.status == "skipped") {
      sum.skipped++;
    } else {
      sum.errors++;
    }
    sum.rows.push_back(std::move(row));
  }
  return sum;
}

inline Json corpus_report(const CorpusSummary& sum) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  Json params;
  params["nvars"] = sum.params.nvars;
  params["max_degree"] = sum.params.max_degree;
  params["count"] = sum.params.count;
  params["seed"] = sum.params.seed;
  params["characteristic"] = sum.params.characteristic;
  doc["params"] = params;
  doc["characteristic_note"] = kCharacteristicNote;
  doc["calibration"] = calibration_to_json(sum.calibration);
  Json rows = Json::array();
  for (const auto& r : sum.rows) {
    Json row;
    row["index"] = r.index;
    row["ideal"] = r.ideal_text;
    row["status"] = r.status;
    if (!r.message.empty()) row["message"] = r.message;
    if (r.status == "ok") {
      row["reg"] = r.reg;
      row["reg_two_routes"] = r.reg_checked;
      row["d"] = r.d;
      row["rees_cm"] = r.rees_cm;
      row["rees_dim"] = r.rees_dim;
      if (r.t_structure) row["t_structure"] = *r.t_structure;
      if (r.t_canonical) row["t_canonical"] = *r.t_canonical;
      if (r.rees_cm) row["lemma_ok"] = r.lemma_ok;
      row["verdict_applicable"] = r.verdict_applicable;
      row["verdict_sound"] = r.verdict_sound;
    }
    rows.push_back(row);
  }
  doc["rows"] = rows;
  Json agg;
  agg["rows"] = int(sum.rows.size());
  agg["ok"] = sum.ok;
  agg["skipped"] = sum.skipped;
  agg["errors"] = sum.errors;
  agg["reg_agreements"] = sum.reg_agreements;
  agg["cm_hits"] = sum.cm_hits;
  agg["lemma_checks"] = sum.lemma_checks;
  agg["lemma_violations"] = sum.lemma_violations;
  agg["verdict_rows"] = sum.verdict_rows;
  agg["verdict_applicable"] = sum.verdict_applicable;
  agg["soundness_violations"] = sum.soundness_violations;
  doc["aggregates"] = agg;
  return doc;
}

inline std::string render_corpus_human(const CorpusSummary& sum) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "corpus: %d instances, %d vars, degree <= %d, seed %llu, "
                "char %lld\n",
                sum.params.count, sum.params.nvars, sum.params.max_degree,
                (unsigned long long)sum.params.seed,
                (long long)sum.params.characteristic);
  out += buf;
  out += "calibration: passed (" +
         std::to_string(sum.calibration.checks.size()) + " anchors)\n";
  for (const auto& r : sum.rows) {
    if (r.status == "ok") {
      std::snprintf(buf, sizeof(buf),
                    "%3d  %-8s reg=%-3d d=%-2d rees_cm=%d%s%s  %6.2fs  %s\n",
                    r.index, r.status.c_str(), r.reg, r.d, int(r.rees_cm),
                    r.rees_cm ? (r.lemma_ok ? " lemma=ok " : " lemma=BAD")
                              : "          ",
                    r.verdict_applicable
                        ? (r.verdict_sound ? " verdict=ok " : " verdict=BAD")
                        : " verdict=n/a",
                    r.seconds, r.ideal_text.c_str());
    } else {
      std::snprintf(buf, sizeof(buf), "%3d  %-8s %s  %6.2fs  %s\n", r.index,
                    r.status.c_str(), r.message.c_str(), r.seconds,
                    r.ideal_text.c_str());
    }
    out += buf;
  }
  std::snprintf(buf, sizeof(buf),
                "totals: ok=%d skipped=%d errors=%d | reg two-route "
                "agreements=%d | CM hits=%d lemma checks=%d violations=%d | "
                "verdicts=%d applicable=%d soundness violations=%d\n",
                sum.ok, sum.skipped, sum.errors, sum.reg_agreements,
                sum.cm_hits, sum.lemma_checks, sum.lemma_violations,
                sum.verdict_rows, sum.verdict_applicable,
                sum.soundness_violations);
  out += buf;
  return out;
}

}  // namespace reeslab
