#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "reeslab/fp.hpp"

namespace reeslab {

// Raised when the anchor suite fails or was never run. Callers that surface
// exit codes map this to a dedicated status.
struct CalibrationError : Error {
  explicit CalibrationError(const std::string& msg) : Error(msg) {}
};

namespace detail {
inline std::set<int64_t>& calibrated_characteristics() {
  static std::set<int64_t> done;
  return done;
}
}  // namespace detail

inline bool is_calibrated(int64_t p) {
  return detail::calibrated_characteristics().count(p) > 0;
}

inline void mark_calibrated(int64_t p) {
  detail::calibrated_characteristics().insert(p);
}

inline void require_calibration(int64_t p) {
  if (!is_calibrated(p))
    throw CalibrationError(
        "t-grading invariants are gated behind the anchor suite; run "
        "calibration for characteristic " +
        std::to_string(p) + " first");
}

}  // namespace reeslab
