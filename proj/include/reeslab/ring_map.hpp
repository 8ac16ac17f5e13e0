#pragma once

#include <utility>
#include <vector>

#include "reeslab/polynomial.hpp"

namespace reeslab {

// A ring homomorphism determined by images of the source variables.
// Characteristics must match. Used for substitution, chart passage and
// graph-ring constructions.
class RingMap {
 public:
  RingMap(RingPtr src, RingPtr dst, std::vector<Polynomial> images)
      : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
    if (int(images_.size()) != src_->nvars())
      throw Error("ring map needs one image per source variable");
    if (src_->field().p() != dst_->field().p())
      throw Error("ring map between different characteristics");
    for (const auto& f : images_)
      if (f.ring().get() != dst_.get())
        throw Error("ring map image lies in the wrong ring");
  }

  const RingPtr& src() const { return src_; }
  const RingPtr& dst() const { return dst_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& f) const {
    if (f.ring().get() != src_.get())
      throw Error("ring map applied to element of the wrong ring");
    Polynomial out = Polynomial::zero(dst_);
    for (const auto& t : f.terms()) {
      Polynomial term = Polynomial::constant(dst_, t.c);
      for (int i = 0; i < src_->nvars(); ++i)
        if (t.m.e[i] > 0) term = poly_mul(term, power(i, t.m.e[i]));
      out = poly_add(out, term);
    }
    return out;
  }

 private:
  Polynomial power(int var, int e) const {
    Polynomial base = images_[var];
    Polynomial acc = Polynomial::constant(dst_, 1);
    while (e > 0) {
      if (e & 1) acc = poly_mul(acc, base);
      e >>= 1;
      if (e) base = poly_mul(base, base);
    }
    return acc;
  }

  RingPtr src_;
  RingPtr dst_;
  std::vector<Polynomial> images_;
};

}  // namespace reeslab
