#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reeslab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic in F_p. Elements are canonical representatives in [0, p).
// p is restricted to odd primes below 2^31 so that products fit in int64.
class Fp {
 public:
  explicit Fp(int64_t p) : p_(p) {
    if (p < 2 || p >= (int64_t(1) << 31))
      throw Error("characteristic out of range: " + std::to_string(p));
    if (!is_prime(p))
      throw Error("characteristic is not prime: " + std::to_string(p));
  }

  int64_t p() const { return p_; }

  int64_t reduce(int64_t a) const {
    int64_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }

  int64_t add(int64_t a, int64_t b) const {
    int64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  int64_t sub(int64_t a, int64_t b) const {
    int64_t s = a - b;
    return s < 0 ? s + p_ : s;
  }

  int64_t neg(int64_t a) const { return a == 0 ? 0 : p_ - a; }

  int64_t mul(int64_t a, int64_t b) const { return (a * b) % p_; }

  int64_t pow(int64_t a, int64_t e) const {
    int64_t r = 1, base = reduce(a);
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  int64_t inv(int64_t a) const {
    if (a == 0) throw Error("division by zero in F_p");
    return pow(a, p_ - 2);
  }

  static bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  int64_t p_;
};

}  // namespace reeslab
