#pragma once

namespace reeslab {

inline constexpr const char* kToolName = "reeslab";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

// Every verdict is a certificate over one prime field; this caveat is
// stamped into every report.
inline constexpr const char* kCharacteristicNote =
    "All values are computed over the prime field F_p for the recorded "
    "characteristic; invariants may differ in other characteristics.";

}  // namespace reeslab
