#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reeslab/fp.hpp"
#include "reeslab/monomial.hpp"
#include "reeslab/order.hpp"

namespace reeslab {

// (x-degree, t-degree) pair. Ordinary graded rings use t = 0 throughout,
// Rees-type rings give fiber variables t-degree 1.
struct Bideg {
  int x = 0;
  int t = 0;

  int total() const { return x + t; }
  Bideg operator+(const Bideg& o) const { return {x + o.x, t + o.t}; }
  Bideg operator-(const Bideg& o) const { return {x - o.x, t - o.t}; }
  Bideg operator-() const { return {-x, -t}; }
  bool operator==(const Bideg& o) const { return x == o.x && t == o.t; }
  bool operator!=(const Bideg& o) const { return !(*this == o); }
  bool operator<(const Bideg& o) const {
    return x != o.x ? x < o.x : t < o.t;
  }
};

// Immutable polynomial ring descriptor: coefficient field, named variables
// with bidegrees, and a monomial order. Instances are shared via
// shared_ptr and never mutated, so caches keyed on the ring stay valid.
class PolyRing {
 public:
  PolyRing(Fp field, std::vector<std::string> names, std::vector<Bideg> degs,
           MonomialOrder order, bool graded)
      : field_(field),
        names_(std::move(names)),
        degs_(std::move(degs)),
        order_(std::move(order)),
        graded_(graded) {
    for (int i = 0; i < int(names_.size()); ++i) index_[names_[i]] = i;
  }

  const Fp& field() const { return field_; }
  int nvars() const { return int(names_.size()); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::string& var_name(int i) const { return names_[i]; }
  const std::vector<Bideg>& var_bidegs() const { return degs_; }
  const Bideg& var_bideg(int i) const { return degs_[i]; }
  const MonomialOrder& order() const { return order_; }
  bool graded() const { return graded_; }

  int var_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  Bideg mono_bideg(const Expo& m) const {
    Bideg d;
    for (int i = 0; i < nvars(); ++i) {
      if (m.e[i]) {
        d.x += m.e[i] * degs_[i].x;
        d.t += m.e[i] * degs_[i].t;
      }
    }
    return d;
  }

  // Sum of all variable bidegrees; the dualizing twist of the ring.
  Bideg sigma() const {
    Bideg s;
    for (const auto& d : degs_) s = s + d;
    return s;
  }

  int cmp(const Expo& a, const Expo& b) const {
    return order_.cmp(a, b, nvars());
  }

  bool same_as(const PolyRing& other) const { return this == &other; }

 private:
  Fp field_;
  std::vector<std::string> names_;
  std::vector<Bideg> degs_;
  MonomialOrder order_;
  bool graded_;
  std::map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

// Validating constructor for user-facing ring creation. Graded rings
// require every variable to carry a nonzero, nonnegative bidegree.
inline RingPtr make_ring(int64_t characteristic,
                         std::vector<std::string> names,
                         std::vector<Bideg> degs = {},
                         MonomialOrder order = MonomialOrder::make_degrevlex()) {
  Fp field(characteristic);
  if (names.empty()) throw Error("ring needs at least one variable");
  if (int(names.size()) > kMaxVars)
    throw Error("too many variables (cap " + std::to_string(kMaxVars) + ")");
  if (degs.empty()) degs.assign(names.size(), Bideg{1, 0});
  if (degs.size() != names.size())
    throw Error("bidegree list does not match variable list");
  std::map<std::string, int> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("empty variable name");
    if (seen.count(n)) throw Error("duplicate variable name: " + n);
    seen[n] = 1;
  }
  for (size_t i = 0; i < degs.size(); ++i) {
    if (degs[i].x < 0 || degs[i].t < 0)
      throw Error("negative bidegree on variable " + names[i]);
    if (degs[i].x == 0 && degs[i].t == 0)
      throw Error("zero bidegree on variable " + names[i]);
  }
  if (order.kind == OrderKind::weighted) {
    if (int(order.weights.size()) != int(names.size()))
      throw Error("weight vector length mismatch");
    for (int w : order.weights)
      if (w <= 0) throw Error("weights must be positive");
  }
  if (order.kind == OrderKind::block &&
      (order.split < 0 || order.split > int(names.size())))
    throw Error("block split out of range");
  return std::make_shared<PolyRing>(field, std::move(names), std::move(degs),
                                    std::move(order), true);
}

// Internal constructor for chart rings: x-degrees are forgotten and the
// grading flag is dropped, but t-degrees are kept for bookkeeping.
inline RingPtr make_chart_ring(
    int64_t characteristic, std::vector<std::string> names,
    std::vector<Bideg> degs,
    MonomialOrder order = MonomialOrder::make_degrevlex()) {
  Fp field(characteristic);
  return std::make_shared<PolyRing>(field, std::move(names), std::move(degs),
                                    std::move(order), false);
}

}  // namespace reeslab
