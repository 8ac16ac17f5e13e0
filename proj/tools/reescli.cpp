// Command-line front end: runs job files, the randomized corpus audit, the
// calibration anchors, and the built-in suite of worked examples.
//
// Exit codes: 0 all tasks succeeded, 1 a task failed or was skipped,
// 2 calibration failed, 3 the job file did not parse.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "reeslab/builtin_jobs.hpp"
#include "reeslab/corpus.hpp"
#include "reeslab/runner.hpp"

namespace {

using namespace reeslab;

struct RunOverrides {
  std::int64_t characteristic = 0;  // 0 keeps the job's value
  std::string order = "degrevlex";
  int n_max = 0;
  int window = 0;
  int degree_bound = 0;
  double time_budget = 0;
  bool json = false;
};

void apply_overrides(JobSpec& spec, const RunOverrides& o) {
  if (o.characteristic != 0) spec.characteristic = o.characteristic;
  if (o.n_max != 0) spec.limits.n_max = o.n_max;
  if (o.window != 0) spec.limits.window = o.window;
  if (o.degree_bound != 0) spec.limits.degree_bound = o.degree_bound;
  if (o.time_budget != 0) spec.limits.time_budget = o.time_budget;
}

MonomialOrder order_from_name(const std::string& name) {
  return name == "lex" ? MonomialOrder::make_lex()
                       : MonomialOrder::make_degrevlex();
}

void add_run_flags(CLI::App* cmd, RunOverrides& o) {
  cmd->add_option("--char", o.characteristic,
                  "override the coefficient characteristic");
  cmd->add_option("--order", o.order, "monomial order")
      ->check(CLI::IsMember({"degrevlex", "lex"}));
  cmd->add_option("--n-max", o.n_max, "override the estimator power range");
  cmd->add_option("--window", o.window,
                  "override the estimator stabilization window");
  cmd->add_option("--degree-bound", o.degree_bound,
                  "override the Hilbert function tabulation bound");
  cmd->add_option("--time-budget", o.time_budget,
                  "override the per-task time budget in seconds");
  cmd->add_flag("--json", o.json, "emit the machine-readable report");
}

int emit_report(const ReportDocument& doc, bool json) {
  if (json)
    std::cout << machine_report(doc).dump(2) << "\n";
  else
    std::cout << render_human(doc);
  return doc.all_ok() ? 0 : 1;
}

int cmd_run(const std::string& path, const RunOverrides& o) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open job file: " << path << "\n";
    return 3;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  JobSpec spec;
  try {
    spec = parse_job(ss.str());
  } catch (const JobParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return 3;
  }
  apply_overrides(spec, o);
  try {
    return emit_report(run_job(spec, order_from_name(o.order)), o.json);
  } catch (const CalibrationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int cmd_suite(const RunOverrides& o) {
  Json suite = Json::array();
  std::string human;
  bool all_ok = true;
  for (const BuiltinJob& bj : builtin_jobs()) {
    JobSpec spec;
    try {
      spec = parse_job(bj.text);
    } catch (const JobParseError& e) {
      std::cerr << bj.name << ": " << e.what() << "\n";
      return 3;
    }
    apply_overrides(spec, o);
    ReportDocument doc;
    try {
      doc = run_job(spec, order_from_name(o.order));
    } catch (const CalibrationError& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    all_ok = all_ok && doc.all_ok();
    if (o.json) {
      Json entry;
      entry["name"] = bj.name;
      entry["report"] = machine_report(doc);
      suite.push_back(entry);
    } else {
      human += "=== " + std::string(bj.name) + " ===\n";
      human += render_human(doc);
      human += "\n";
    }
  }
  if (o.json) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    doc["suite"] = suite;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << human;
  }
  return all_ok ? 0 : 1;
}

int cmd_calibrate(std::int64_t characteristic, bool json) {
  try {
    const CalibrationRecord& rec = ensure_calibrated(characteristic);
    if (json) {
      std::cout << calibration_to_json(rec).dump(2) << "\n";
    } else {
      std::cout << "calibration passed for characteristic " << characteristic
                << " (" << rec.checks.size() << " anchors)\n";
      for (const auto& c : rec.checks)
        std::cout << "  " << c.name << ": expected " << c.expected << ", got "
                  << c.got << "\n";
    }
    return 0;
  } catch (const CalibrationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int cmd_corpus(const CorpusParams& params, bool json) {
  CorpusSummary sum;
  try {
    sum = run_corpus(params);
  } catch (const CalibrationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (json)
    std::cout << corpus_report(sum).dump(2) << "\n";
  else
    std::cout << render_corpus_human(sum);
  return (sum.clean() && sum.skipped == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of blow-up algebras over a prime field"};
  app.require_subcommand(1);

  RunOverrides run_opts;
  std::string job_path;
  CLI::App* run = app.add_subcommand("run", "execute a job file");
  run->add_option("jobfile", job_path, "job file to execute")->required();
  add_run_flags(run, run_opts);

  RunOverrides suite_opts;
  CLI::App* suite =
      app.add_subcommand("suite", "run the built-in worked examples");
  add_run_flags(suite, suite_opts);

  std::int64_t cal_char = 101;
  bool cal_json = false;
  CLI::App* cal =
      app.add_subcommand("calibrate", "check the calibration anchors");
  cal->add_option("--char", cal_char, "coefficient characteristic");
  cal->add_flag("--json", cal_json, "emit the machine-readable record");

  CorpusParams corpus_params;
  bool corpus_json = false;
  CLI::App* corpus =
      app.add_subcommand("corpus", "audit random monomial ideals");
  corpus->add_option("--count", corpus_params.count, "number of instances");
  corpus->add_option("--seed", corpus_params.seed, "instance generator seed");
  corpus->add_option("--char", corpus_params.characteristic,
                     "coefficient characteristic");
  corpus->add_option("--max-degree", corpus_params.max_degree,
                     "largest generator degree drawn");
  corpus->add_option("--time-budget", corpus_params.time_budget,
                     "per-row time budget in seconds");
  corpus->add_flag("--json", corpus_json, "emit the machine-readable report");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cmd_run(job_path, run_opts);
  if (suite->parsed()) return cmd_suite(suite_opts);
  if (cal->parsed()) return cmd_calibrate(cal_char, cal_json);
  if (corpus->parsed()) return cmd_corpus(corpus_params, corpus_json);
  return 0;
}
