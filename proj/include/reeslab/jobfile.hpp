#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "reeslab/ideal.hpp"

namespace reeslab {

// Parse diagnostic carrying a 1-based source position.
struct JobParseError : Error {
  int line = 0;
  int col = 0;
  JobParseError(int line_, int col_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ", col " +
              std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// One requested operation. `target` is used only by `verdict`; `polys`
// only by `canonical_strands ... using <list>`.
struct JobTask {
  std::string op;
  std::string target;
  std::vector<long long> args;
  std::vector<std::string> polys;
  int line = 0;  // provenance only; not part of the value

  bool operator==(const JobTask& o) const {
    return op == o.op && target == o.target && args == o.args &&
           polys == o.polys;
  }
};

struct JobLimits {
  int n_max = 4;
  int window = 3;
  int degree_bound = 12;
  double time_budget = 300.0;  // seconds of wall clock per task

  bool operator==(const JobLimits&) const = default;
};

// A parsed job: ring and ideal data as validated source strings plus the
// task list. Polynomial texts are kept verbatim (trimmed) so that
// parse -> serialize -> parse is the identity.
struct JobSpec {
  long long characteristic = 101;
  std::vector<std::string> variables;
  std::vector<std::string> relations;
  std::vector<std::string> generators;
  bool has_ideal = false;
  JobLimits limits;
  std::vector<JobTask> tasks;

  bool operator==(const JobSpec&) const = default;
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline bool is_ident(const std::string& s) {
  if (s.empty() || (!std::isalpha((unsigned char)s[0]) && s[0] != '_'))
    return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return true;
}

// Split a line into whitespace-separated words with their 1-based columns.
inline std::vector<std::pair<std::string, int>> words_of(
    const std::string& line) {
  std::vector<std::pair<std::string, int>> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
    if (i >= line.size()) break;
    size_t j = i;
    while (j < line.size() && !std::isspace((unsigned char)line[j])) ++j;
    out.push_back({line.substr(i, j - i), int(i) + 1});
    i = j;
  }
  return out;
}

// Comma-separated polynomial list with the column of each entry.
inline std::vector<std::pair<std::string, int>> split_polys(
    const std::string& text, int base_col) {
  std::vector<std::pair<std::string, int>> out;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string piece = text.substr(start, i - start);
      size_t lead = piece.find_first_not_of(" \t");
      std::string t = trim(piece);
      if (!t.empty())
        out.push_back(
            {t, base_col + int(start) + (lead == std::string::npos
                                             ? 0
                                             : int(lead))});
      start = i + 1;
    }
  }
  return out;
}

struct TaskShape {
  int int_args = 0;
  bool takes_target = false;
  bool takes_polys = false;
};

inline const std::map<std::string, TaskShape>& task_shapes() {
  static const std::map<std::string, TaskShape> shapes = {
      {"dim_base", {0, false, false}},
      {"a_star_base", {0, false, false}},
      {"max_gen_degree", {0, false, false}},
      {"a_star_power", {1, false, false}},
      {"epsilon", {2, false, false}},
      {"epsilon_star", {2, false, false}},
      {"rees_cm", {0, false, false}},
      {"locally_cm", {0, false, false}},
      {"diagonal_cm", {2, false, false}},
      {"truncated_rees_cm", {2, false, false}},
      {"canonical_strands", {1, false, true}},
      {"verdict", {2, true, false}},
  };
  return shapes;
}

inline long long parse_int_token(const std::string& w, int line, int col,
                                 const std::string& what) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(w, &pos);
  } catch (...) {
    throw JobParseError(line, col, what + " expects an integer, got \"" + w +
                                       "\"");
  }
  if (pos != w.size())
    throw JobParseError(line, col,
                        what + " expects an integer, got \"" + w + "\"");
  return v;
}

}  // namespace detail

// Parses the block job format:
//
//   # comment
//   ring {
//     characteristic 101
//     variables x0 x1 x2
//     relations x*y^2 - z^3        # comma-separated, repeatable
//   }
//   ideal {
//     generators x1^4, x1^3*x2     # comma-separated, repeatable
//   }
//   limits {                       # optional; keys optional
//     n_max 4
//     window 3
//     degree_bound 12
//     time_budget 300
//   }
//   tasks {
//     a_star_power 2
//     canonical_strands 3 using x^4, y^4
//     verdict truncated_rees 1 2
//   }
//
// Every polynomial is validated against the declared variables; unknown
// blocks, keys, and task names are rejected with the offending token.
inline JobSpec parse_job(const std::string& text) {
  JobSpec spec;
  bool saw_ring = false, saw_limits = false, saw_tasks = false;
  std::string block;  // current block name, empty at top level
  int block_line = 0;

  // Raw polynomial occurrences for post-pass validation: text, line, col.
  struct PolyRef {
    std::string text;
    int line, col;
  };
  std::vector<PolyRef> poly_refs;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string t = detail::trim(line);
    if (t.empty()) continue;

    if (block.empty()) {
      auto ws = detail::words_of(line);
      if (ws.size() != 2 || ws[1].first != "{")
        throw JobParseError(lineno, ws.empty() ? 1 : ws[0].second,
                            "expected a block header like \"ring {\"");
      const std::string& name = ws[0].first;
      if (name == "ring") {
        if (saw_ring)
          throw JobParseError(lineno, ws[0].second, "duplicate block: ring");
        saw_ring = true;
      } else if (name == "ideal") {
        if (spec.has_ideal)
          throw JobParseError(lineno, ws[0].second, "duplicate block: ideal");
        spec.has_ideal = true;
      } else if (name == "limits") {
        if (saw_limits)
          throw JobParseError(lineno, ws[0].second,
                              "duplicate block: limits");
        saw_limits = true;
      } else if (name == "tasks") {
        if (saw_tasks)
          throw JobParseError(lineno, ws[0].second, "duplicate block: tasks");
        saw_tasks = true;
      } else {
        throw JobParseError(lineno, ws[0].second,
                            "unknown block: " + name);
      }
      block = name;
      block_line = lineno;
      continue;
    }

    if (t == "}") {
      block.clear();
      continue;
    }

    auto ws = detail::words_of(line);
    const std::string& key = ws[0].first;
    const int key_col = ws[0].second;

    if (block == "ring") {
      if (key == "characteristic") {
        if (ws.size() != 2)
          throw JobParseError(lineno, key_col,
                              "characteristic expects one integer");
        spec.characteristic = detail::parse_int_token(
            ws[1].first, lineno, ws[1].second, "characteristic");
      } else if (key == "variables") {
        if (ws.size() < 2)
          throw JobParseError(lineno, key_col,
                              "variables expects at least one name");
        // Names separated by whitespace, commas, or both.
        for (size_t i = 1; i < ws.size(); ++i) {
          std::string tok = ws[i].first;
          int col = ws[i].second;
          size_t pos = 0;
          while (pos < tok.size()) {
            size_t comma = tok.find(',', pos);
            std::string name = tok.substr(
                pos, comma == std::string::npos ? comma : comma - pos);
            if (!name.empty()) {
              if (!detail::is_ident(name))
                throw JobParseError(lineno, col + int(pos),
                                    "invalid variable name: " + name);
              spec.variables.push_back(name);
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
          }
        }
        if (spec.variables.empty())
          throw JobParseError(lineno, key_col,
                              "variables expects at least one name");
      } else if (key == "relations") {
        size_t off = line.find(key) + key.size();
        for (auto& [p, col] :
             detail::split_polys(line.substr(off), int(off) + 1)) {
          spec.relations.push_back(p);
          poly_refs.push_back({p, lineno, col});
        }
      } else {
        throw JobParseError(lineno, key_col, "unknown key in ring: " + key);
      }
    } else if (block == "ideal") {
      if (key == "generators") {
        size_t off = line.find(key) + key.size();
        for (auto& [p, col] :
             detail::split_polys(line.substr(off), int(off) + 1)) {
          spec.generators.push_back(p);
          poly_refs.push_back({p, lineno, col});
        }
      } else {
        throw JobParseError(lineno, key_col, "unknown key in ideal: " + key);
      }
    } else if (block == "limits") {
      if (ws.size() != 2)
        throw JobParseError(lineno, key_col, key + " expects one value");
      const std::string& val = ws[1].first;
      const int vcol = ws[1].second;
      if (key == "n_max" || key == "window" || key == "degree_bound") {
        long long v = detail::parse_int_token(val, lineno, vcol, key);
        if (v < 1 || v > 1000000)
          throw JobParseError(lineno, vcol, key + " out of range");
        (key == "n_max" ? spec.limits.n_max
         : key == "window" ? spec.limits.window
                           : spec.limits.degree_bound) = int(v);
      } else if (key == "time_budget") {
        double d = 0;
        size_t pos = 0;
        try {
          d = std::stod(val, &pos);
        } catch (...) {
          pos = std::string::npos;
        }
        if (pos != val.size() || !(d > 0))
          throw JobParseError(lineno, vcol,
                              "time_budget expects positive seconds");
        spec.limits.time_budget = d;
      } else {
        throw JobParseError(lineno, key_col, "unknown key in limits: " + key);
      }
    } else {  // tasks
      auto shapes = detail::task_shapes();
      auto it = shapes.find(key);
      if (it == shapes.end())
        throw JobParseError(lineno, key_col, "unknown task: " + key);
      const detail::TaskShape& shape = it->second;
      JobTask task;
      task.op = key;
      task.line = lineno;
      size_t w = 1;
      if (shape.takes_target) {
        if (w >= ws.size())
          throw JobParseError(lineno, key_col,
                              key + " expects a target name");
        task.target = ws[w].first;
        if (task.target != "diagonal" && task.target != "truncated_rees")
          throw JobParseError(lineno, ws[w].second,
                              "unknown verdict target: " + task.target);
        ++w;
      }
      for (int k = 0; k < shape.int_args; ++k, ++w) {
        if (w >= ws.size())
          throw JobParseError(lineno, key_col,
                              key + " expects " +
                                  std::to_string(shape.int_args) +
                                  " integer argument(s)");
        task.args.push_back(detail::parse_int_token(ws[w].first, lineno,
                                                    ws[w].second, key));
      }
      if (w < ws.size()) {
        if (!shape.takes_polys || ws[w].first != "using")
          throw JobParseError(lineno, ws[w].second,
                              "unexpected argument for " + key + ": " +
                                  ws[w].first);
        size_t off = line.find("using", size_t(ws[w].second - 1)) + 5;
        auto list = detail::split_polys(line.substr(off), int(off) + 1);
        if (list.empty())
          throw JobParseError(lineno, ws[w].second,
                              "using expects a polynomial list");
        for (auto& [p, col] : list) {
          task.polys.push_back(p);
          poly_refs.push_back({p, lineno, col});
        }
      }
      for (long long a : task.args)
        if (a < 0)
          throw JobParseError(lineno, key_col,
                              key + ": arguments must be nonnegative");
      spec.tasks.push_back(std::move(task));
    }
  }
  if (!block.empty())
    throw JobParseError(block_line, 1, "unclosed block: " + block);
  if (!saw_ring) throw JobParseError(lineno, 1, "missing ring block");
  if (spec.variables.empty())
    throw JobParseError(lineno, 1, "ring block declares no variables");

  // Validate polynomials: identifiers must be declared variables, and the
  // text must parse over the declared ring.
  RingPtr R;
  try {
    R = make_ring(spec.characteristic, spec.variables);
  } catch (const Error& e) {
    throw JobParseError(lineno, 1, e.what());
  }
  for (const auto& ref : poly_refs) {
    const std::string& s = ref.text;
    for (size_t i = 0; i < s.size();) {
      if (std::isalpha((unsigned char)s[i]) || s[i] == '_') {
        size_t j = i;
        while (j < s.size() &&
               (std::isalnum((unsigned char)s[j]) || s[j] == '_'))
          ++j;
        std::string ident = s.substr(i, j - i);
        if (R->var_index(ident) < 0)
          throw JobParseError(ref.line, ref.col + int(i),
                              "undeclared variable: " + ident);
        i = j;
      } else {
        ++i;
      }
    }
    try {
      parse_poly(R, s);
    } catch (const Error& e) {
      throw JobParseError(ref.line, ref.col,
                          std::string("bad polynomial: ") + e.what());
    }
  }
  return spec;
}

inline std::string serialize_job(const JobSpec& spec) {
  std::ostringstream out;
  out << "ring {\n";
  out << "  characteristic " << spec.characteristic << "\n";
  out << "  variables";
  for (const auto& v : spec.variables) out << " " << v;
  out << "\n";
  if (!spec.relations.empty()) {
    out << "  relations ";
    for (size_t i = 0; i < spec.relations.size(); ++i)
      out << (i ? ", " : "") << spec.relations[i];
    out << "\n";
  }
  out << "}\n";
  if (spec.has_ideal) {
    out << "ideal {\n";
    if (!spec.generators.empty()) {
      out << "  generators ";
      for (size_t i = 0; i < spec.generators.size(); ++i)
        out << (i ? ", " : "") << spec.generators[i];
      out << "\n";
    }
    out << "}\n";
  }
  out << "limits {\n";
  out << "  n_max " << spec.limits.n_max << "\n";
  out << "  window " << spec.limits.window << "\n";
  out << "  degree_bound " << spec.limits.degree_bound << "\n";
  std::ostringstream tb;
  tb << spec.limits.time_budget;
  out << "  time_budget " << tb.str() << "\n";
  out << "}\n";
  out << "tasks {\n";
  for (const auto& t : spec.tasks) {
    out << "  " << t.op;
    if (!t.target.empty()) out << " " << t.target;
    for (long long a : t.args) out << " " << a;
    if (!t.polys.empty()) {
      out << " using ";
      for (size_t i = 0; i < t.polys.size(); ++i)
        out << (i ? ", " : "") << t.polys[i];
    }
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace reeslab
