#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "reeslab/calibration.hpp"
#include "reeslab/jobfile.hpp"
#include "reeslab/version.hpp"

namespace reeslab {

using Json = nlohmann::ordered_json;

// Result of one task. `values` holds the operation-specific numbers and
// witnesses; `seconds` appears only in the human rendering so that the
// machine report stays byte-identical across runs.
struct TaskOutcome {
  std::string id;
  std::string op;
  std::string status;   // "ok" | "error" | "skipped"
  std::string message;  // failure or skip reason; empty when ok
  Json values = Json::object();
  double seconds = 0;
};

struct ReportDocument {
  int64_t characteristic = 101;
  std::string order_name = "degrevlex";
  CalibrationRecord calibration;
  JobSpec job;
  std::vector<TaskOutcome> tasks;

  bool all_ok() const {
    for (const auto& t : tasks)
      if (t.status != "ok") return false;
    return true;
  }
};

inline Json job_to_json(const JobSpec& spec) {
  Json j;
  j["characteristic"] = spec.characteristic;
  j["variables"] = spec.variables;
  j["relations"] = spec.relations;
  if (spec.has_ideal) j["generators"] = spec.generators;
  Json lim;
  lim["n_max"] = spec.limits.n_max;
  lim["window"] = spec.limits.window;
  lim["degree_bound"] = spec.limits.degree_bound;
  lim["time_budget"] = spec.limits.time_budget;
  j["limits"] = lim;
  Json tasks = Json::array();
  for (const auto& t : spec.tasks) {
    Json tj;
    tj["op"] = t.op;
    if (!t.target.empty()) tj["target"] = t.target;
    tj["args"] = t.args;
    if (!t.polys.empty()) tj["using"] = t.polys;
    tasks.push_back(tj);
  }
  j["tasks"] = tasks;
  return j;
}

inline Json calibration_to_json(const CalibrationRecord& rec) {
  Json j;
  j["characteristic"] = rec.characteristic;
  j["passed"] = true;  // a record exists only when every anchor matched
  Json anchors = Json::array();
  for (const auto& c : rec.checks) {
    Json a;
    a["name"] = c.name;
    a["expected"] = c.expected;
    a["got"] = c.got;
    anchors.push_back(a);
  }
  j["anchors"] = anchors;
  return j;
}

// The stable machine form: timings are deliberately absent.
inline Json machine_report(const ReportDocument& doc) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  j["characteristic"] = doc.characteristic;
  j["order"] = doc.order_name;
  j["characteristic_note"] = kCharacteristicNote;
  j["calibration"] = calibration_to_json(doc.calibration);
  j["job"] = job_to_json(doc.job);
  Json tasks = Json::array();
  for (const auto& t : doc.tasks) {
    Json tj;
    tj["id"] = t.id;
    tj["op"] = t.op;
    tj["status"] = t.status;
    if (!t.message.empty()) tj["message"] = t.message;
    tj["values"] = t.values;
    tasks.push_back(tj);
  }
  j["tasks"] = tasks;
  return j;
}

inline std::string render_human(const ReportDocument& doc) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %s  characteristic %lld  order %s\n",
                kToolName, kToolVersion, (long long)doc.characteristic,
                doc.order_name.c_str());
  out += buf;
  std::snprintf(buf, sizeof buf, "calibration: %zu anchors passed\n",
                doc.calibration.checks.size());
  out += buf;
  for (const auto& t : doc.tasks) {
    std::snprintf(buf, sizeof buf, "%-4s %-22s %-8s %7.2fs  ", t.id.c_str(),
                  t.op.c_str(), t.status.c_str(), t.seconds);
    out += buf;
    if (t.status == "ok")
      out += t.values.dump();
    else
      out += t.message;
    out += "\n";
  }
  return out;
}

}  // namespace reeslab
