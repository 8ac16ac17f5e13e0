#pragma once

#include <array>
#include <cstdint>
#include <numeric>

#include "reeslab/fp.hpp"

namespace reeslab {

// Hard cap on ring size. Graph rings for kernel computations take
// base vars + fiber vars + one homogenizing variable, so this leaves
// comfortable headroom for the instances this library targets.
constexpr int kMaxVars = 32;

// Exponent vector of a monomial. Fixed-size POD so that Gröbner loops
// do not touch the heap; the active length comes from the ring.
struct Expo {
  std::array<int16_t, kMaxVars> e{};

  int16_t operator[](int i) const { return e[i]; }
  int16_t& operator[](int i) { return e[i]; }

  bool operator==(const Expo& o) const { return e == o.e; }
  bool operator!=(const Expo& o) const { return e != o.e; }
};

inline int total_degree(const Expo& a, int nvars) {
  int d = 0;
  for (int i = 0; i < nvars; ++i) d += a.e[i];
  return d;
}

inline bool divides(const Expo& a, const Expo& b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Expo mono_mul(const Expo& a, const Expo& b, int nvars) {
  Expo r;
  for (int i = 0; i < nvars; ++i) r.e[i] = int16_t(a.e[i] + b.e[i]);
  return r;
}

// b / a, caller guarantees divisibility.
inline Expo mono_div(const Expo& b, const Expo& a, int nvars) {
  Expo r;
  for (int i = 0; i < nvars; ++i) r.e[i] = int16_t(b.e[i] - a.e[i]);
  return r;
}

inline Expo mono_lcm(const Expo& a, const Expo& b, int nvars) {
  Expo r;
  for (int i = 0; i < nvars; ++i)
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return r;
}

inline bool mono_coprime(const Expo& a, const Expo& b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

inline bool is_one(const Expo& a, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] != 0) return false;
  return true;
}

}  // namespace reeslab
