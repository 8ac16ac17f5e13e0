#pragma once

#include <string>
#include <vector>

#include "reeslab/monomial.hpp"

namespace reeslab {

enum class OrderKind { degrevlex, lex, block, weighted };

// A global monomial order. All four kinds are well-orders for positive
// weights, which make_ring enforces.
//
//   degrevlex : total degree, ties by smaller exponent on the last
//               differing variable
//   lex       : pure lexicographic
//   block     : variables [0, split) form an outer degrevlex block that is
//               compared first; ties fall through to the remaining
//               variables. This is an elimination order for the outer block.
//   weighted  : weight vector first, ties broken by degrevlex
struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;
  int split = 0;                 // block only
  std::vector<int> weights;      // weighted only

  static MonomialOrder make_degrevlex() { return {}; }
  static MonomialOrder make_lex() { return {OrderKind::lex, 0, {}}; }
  static MonomialOrder make_block(int split_index) {
    return {OrderKind::block, split_index, {}};
  }
  static MonomialOrder make_weighted(std::vector<int> w) {
    return {OrderKind::weighted, 0, std::move(w)};
  }

  std::string name() const {
    switch (kind) {
      case OrderKind::degrevlex: return "degrevlex";
      case OrderKind::lex: return "lex";
      case OrderKind::block: return "block(" + std::to_string(split) + ")";
      case OrderKind::weighted: return "weighted";
    }
    return "?";
  }

  // Returns +1 if a > b, 0 if equal, -1 if a < b.
  int cmp(const Expo& a, const Expo& b, int nvars) const {
    switch (kind) {
      case OrderKind::degrevlex:
        return cmp_degrevlex(a, b, 0, nvars);
      case OrderKind::lex:
        for (int i = 0; i < nvars; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
      case OrderKind::block: {
        int r = cmp_degrevlex(a, b, 0, split);
        if (r != 0) return r;
        return cmp_degrevlex(a, b, split, nvars);
      }
      case OrderKind::weighted: {
        long wa = 0, wb = 0;
        for (int i = 0; i < nvars; ++i) {
          wa += long(weights[i]) * a.e[i];
          wb += long(weights[i]) * b.e[i];
        }
        if (wa != wb) return wa > wb ? 1 : -1;
        return cmp_degrevlex(a, b, 0, nvars);
      }
    }
    return 0;
  }

 private:
  static int cmp_degrevlex(const Expo& a, const Expo& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }
};

}  // namespace reeslab
