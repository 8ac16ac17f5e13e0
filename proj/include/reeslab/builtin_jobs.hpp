#pragma once

#include <string>
#include <vector>

namespace reeslab {

// The two worked job files shipped with the tool, embedded so the suite
// subcommand runs without any filesystem lookup. The copies under jobs/
// must stay byte-identical; a test enforces that.
struct BuiltinJob {
  const char* name;
  const char* text;
};

inline const std::vector<BuiltinJob>& builtin_jobs() {
  static const std::vector<BuiltinJob> jobs = {
      {"quartic_plane_blowup",
       R"JOB(# Blow-up of the plane along a four-generated quartic monomial ideal.
# The ideal misses x1^2*x2^2, so its powers are not integrally closed and
# the associated algebras separate the invariants this tool computes.

ring {
  characteristic 101
  variables x0, x1, x2
}

ideal {
  generators x1^4, x1^3*x2, x1*x2^3, x2^4
}

limits {
  n_max 4
  window 3
  degree_bound 12
  time_budget 300
}

tasks {
  max_gen_degree
  a_star_power 1
  a_star_power 2
  a_star_power 3
  epsilon 4 3
  canonical_strands 3 using x1^4, x1^3*x2, x1^2*x2^2, x1*x2^3, x2^4
  diagonal_cm 1 4
  diagonal_cm 1 5
  truncated_rees_cm 1 5
}
)JOB"},
      {"cusp_line_blowup",
       R"JOB(# Blow-up of the cuspidal hypersurface x*y^2 = z^3 along the line x = 0.
# The base ring has top a-invariant 0, so the truncation predictions are
# gated off: the verdict task shows the failing hypothesis explicitly.

ring {
  characteristic 101
  variables x, y, z
  relations x*y^2 - z^3
}

ideal {
  generators x
}

limits {
  n_max 4
  window 3
  degree_bound 12
  time_budget 300
}

tasks {
  dim_base
  a_star_base
  rees_cm
  truncated_rees_cm 1 1
  truncated_rees_cm 1 2
  truncated_rees_cm 1 3
  verdict truncated_rees 1 2
}
)JOB"},
  };
  return jobs;
}

}  // namespace reeslab
