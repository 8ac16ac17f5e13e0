#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "reeslab/polynomial.hpp"

namespace reeslab {

struct GroebnerData;  // defined in buchberger.hpp

// An ideal of a polynomial ring, held as a generator list. The reduced
// Groebner basis is computed lazily and cached (the cache is shared when
// the ideal is copied).
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (auto& g : gens_)
      if (g.ring().get() != ring_.get())
        throw Error("ideal generator lies in the wrong ring");
    // Drop zero generators; keep order otherwise.
    std::vector<Polynomial> kept;
    for (auto& g : gens_)
      if (!g.is_zero()) kept.push_back(std::move(g));
    gens_ = std::move(kept);
    cache_ = std::make_shared<Cache>();
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool is_homogeneous() const {
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  // Cache slot managed by the Groebner engine.
  struct Cache {
    std::shared_ptr<const GroebnerData> gb;
  };
  const std::shared_ptr<Cache>& cache() const { return cache_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline Ideal parse_ideal(const RingPtr& ring,
                         const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  ps.reserve(gens.size());
  for (const auto& s : gens) ps.push_back(parse_poly(ring, s));
  return Ideal(ring, std::move(ps));
}

}  // namespace reeslab
