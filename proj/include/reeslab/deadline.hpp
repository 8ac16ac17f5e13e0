#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "reeslab/fp.hpp"

namespace reeslab {

// Thrown when a cooperative wall-clock budget expires inside a long
// computation. Callers report the work as skipped; a partial result is
// never returned.
struct TimeBudgetExceeded : Error {
  TimeBudgetExceeded() : Error("time budget exceeded") {}
};

namespace detail {

using DeadlineClock = std::chrono::steady_clock;

inline std::optional<DeadlineClock::time_point>& deadline_slot() {
  thread_local std::optional<DeadlineClock::time_point> slot;
  return slot;
}

// Amortized check for inner loops: the clock is consulted once every 4096
// calls, so the overhead is a counter increment on the hot path.
inline void poll_deadline() {
  thread_local uint32_t tick = 0;
  if ((++tick & 0xFFFu) != 0) return;
  auto& s = deadline_slot();
  if (s && DeadlineClock::now() > *s) throw TimeBudgetExceeded();
}

}  // namespace detail

// Scoped wall-clock budget. Nested guards keep the tighter deadline; the
// previous deadline is restored on scope exit.
class DeadlineGuard {
 public:
  explicit DeadlineGuard(double seconds) : saved_(detail::deadline_slot()) {
    auto dl = detail::DeadlineClock::now() +
              std::chrono::duration_cast<detail::DeadlineClock::duration>(
                  std::chrono::duration<double>(seconds));
    auto& s = detail::deadline_slot();
    if (!s || dl < *s) s = dl;
  }
  ~DeadlineGuard() { detail::deadline_slot() = saved_; }
  DeadlineGuard(const DeadlineGuard&) = delete;
  DeadlineGuard& operator=(const DeadlineGuard&) = delete;

 private:
  std::optional<detail::DeadlineClock::time_point> saved_;
};

}  // namespace reeslab
