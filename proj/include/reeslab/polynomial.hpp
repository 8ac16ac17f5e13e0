#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reeslab/ring.hpp"

namespace reeslab {

// Engine-level term: monomial, free-module component, coefficient.
// Ring polynomials are the comp == 0 case. deg caches the total degree
// of the monomial (not including any row shift).
struct MTerm {
  Expo m;
  int32_t comp = 0;
  int64_t c = 0;
  int32_t deg = 0;
};

inline bool operator==(const MTerm& a, const MTerm& b) {
  return a.comp == b.comp && a.c == b.c && a.m == b.m;
}
inline bool operator!=(const MTerm& a, const MTerm& b) { return !(a == b); }

// Sorted descending (module order), no zero coefficients, no duplicates.
using MPoly = std::vector<MTerm>;

// Term-over-position module order on top of the ring's monomial order:
// monomials compare by the ring order, ties go to the smaller component.
// Any such order is global and multiplicative, which is all that
// Buchberger and the syzygy machinery require.
inline int term_cmp(const PolyRing& R, const MTerm& a, const MTerm& b) {
  int r = R.cmp(a.m, b.m);
  if (r != 0) return r;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

inline MTerm make_term(const PolyRing& R, Expo m, int comp, int64_t c) {
  MTerm t;
  t.m = m;
  t.comp = comp;
  t.c = c;
  t.deg = total_degree(m, R.nvars());
  return t;
}

// Sorts, merges equal terms, drops zeros. Used after bulk construction.
inline void mpoly_normalize(const PolyRing& R, MPoly& f) {
  std::sort(f.begin(), f.end(), [&](const MTerm& a, const MTerm& b) {
    return term_cmp(R, a, b) > 0;
  });
  MPoly out;
  out.reserve(f.size());
  for (const auto& t : f) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = R.field().add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(t);
    }
  }
  f = std::move(out);
}

inline MPoly mpoly_add(const PolyRing& R, const MPoly& a, const MPoly& b) {
  MPoly out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int r = term_cmp(R, a[i], b[j]);
    if (r > 0) {
      out.push_back(a[i++]);
    } else if (r < 0) {
      out.push_back(b[j++]);
    } else {
      int64_t c = R.field().add(a[i].c, b[j].c);
      if (c != 0) {
        out.push_back(a[i]);
        out.back().c = c;
      }
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

inline void mpoly_scale(const PolyRing& R, MPoly& f, int64_t c) {
  if (c == 0) {
    f.clear();
    return;
  }
  for (auto& t : f) t.c = R.field().mul(t.c, c);
}

// f -= c * x^u * g. The workhorse of reduction; merge-based, linear time.
inline void mpoly_sub_mul(const PolyRing& R, MPoly& f, int64_t c,
                          const Expo& u, int udeg, const MPoly& g) {
  const Fp& F = R.field();
  const int nv = R.nvars();
  MPoly out;
  out.reserve(f.size() + g.size());
  size_t i = 0, j = 0;
  MTerm gt;
  auto load = [&](size_t jj) {
    gt.m = mono_mul(g[jj].m, u, nv);
    gt.comp = g[jj].comp;
    gt.deg = g[jj].deg + udeg;
    gt.c = F.neg(F.mul(c, g[jj].c));
  };
  if (j < g.size()) load(j);
  while (i < f.size() && j < g.size()) {
    int r = term_cmp(R, f[i], gt);
    if (r > 0) {
      out.push_back(f[i++]);
    } else if (r < 0) {
      out.push_back(gt);
      if (++j < g.size()) load(j);
    } else {
      int64_t cc = F.add(f[i].c, gt.c);
      if (cc != 0) {
        out.push_back(f[i]);
        out.back().c = cc;
      }
      ++i;
      if (++j < g.size()) load(j);
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  while (j < g.size()) {
    out.push_back(gt);
    if (++j < g.size()) load(j);
  }
  f = std::move(out);
}

// Full product, ring-level (all comps must be 0 in at least one factor;
// in practice both are ring elements).
inline MPoly mpoly_mul(const PolyRing& R, const MPoly& a, const MPoly& b) {
  MPoly out;
  out.reserve(a.size() * b.size());
  const int nv = R.nvars();
  for (const auto& s : a)
    for (const auto& t : b) {
      MTerm u;
      u.m = mono_mul(s.m, t.m, nv);
      u.comp = s.comp + t.comp;
      u.c = R.field().mul(s.c, t.c);
      u.deg = s.deg + t.deg;
      out.push_back(u);
    }
  mpoly_normalize(R, out);
  return out;
}

inline void mpoly_monic(const PolyRing& R, MPoly& f) {
  if (f.empty()) return;
  int64_t inv = R.field().inv(f.front().c);
  if (inv != 1) mpoly_scale(R, f, inv);
}

// ---------------------------------------------------------------------------
// Public polynomial type: a ring element tied to its ring.

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(RingPtr ring, MPoly terms)
      : ring_(std::move(ring)), t_(std::move(terms)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

  static Polynomial constant(RingPtr ring, int64_t c) {
    MPoly t;
    c = ring->field().reduce(c);
    if (c != 0) t.push_back(make_term(*ring, Expo{}, 0, c));
    return Polynomial(std::move(ring), std::move(t));
  }

  static Polynomial variable(RingPtr ring, int i, int power = 1) {
    Expo m;
    m[i] = int16_t(power);
    MPoly t{make_term(*ring, m, 0, 1)};
    return Polynomial(std::move(ring), std::move(t));
  }

  const RingPtr& ring() const { return ring_; }
  const MPoly& terms() const { return t_; }
  MPoly& terms() { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  const MTerm& lead() const {
    if (t_.empty()) throw Error("lead term of zero polynomial");
    return t_.front();
  }

  // Bidegree if homogeneous (all terms share one bidegree), else nullopt.
  std::optional<Bideg> bideg() const {
    if (t_.empty()) return std::nullopt;
    Bideg d = ring_->mono_bideg(t_.front().m);
    for (size_t i = 1; i < t_.size(); ++i)
      if (ring_->mono_bideg(t_[i].m) != d) return std::nullopt;
    return d;
  }

  bool is_homogeneous() const { return t_.empty() || bideg().has_value(); }

  // Largest total degree over the terms; 0 for the zero polynomial.
  int max_total_degree() const {
    int d = 0;
    for (const auto& t : t_) d = std::max(d, int(t.deg));
    return d;
  }

 private:
  RingPtr ring_;
  MPoly t_;
};

inline void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring().get() != b.ring().get())
    throw Error("polynomials belong to different rings");
}

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  return Polynomial(a.ring(), mpoly_add(*a.ring(), a.terms(), b.terms()));
}

inline Polynomial poly_neg(const Polynomial& a) {
  MPoly t = a.terms();
  for (auto& u : t) u.c = a.ring()->field().neg(u.c);
  return Polynomial(a.ring(), std::move(t));
}

inline Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  return poly_add(a, poly_neg(b));
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  return Polynomial(a.ring(), mpoly_mul(*a.ring(), a.terms(), b.terms()));
}

inline Polynomial poly_scale(const Polynomial& a, int64_t c) {
  MPoly t = a.terms();
  mpoly_scale(*a.ring(), t, a.ring()->field().reduce(c));
  if (a.ring()->field().reduce(c) == 0) t.clear();
  return Polynomial(a.ring(), std::move(t));
}

inline Polynomial poly_monic(const Polynomial& a) {
  MPoly t = a.terms();
  mpoly_monic(*a.ring(), t);
  return Polynomial(a.ring(), std::move(t));
}

// ---------------------------------------------------------------------------
// Printing. Canonical form: terms in ring order, coefficients in [1, p-1],
// explicit '*' between factors, '^' for powers.

inline std::string mono_to_string(const PolyRing& R, const Expo& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < R.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << "*";
    os << R.var_name(i);
    if (m.e[i] > 1) os << "^" << m.e[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

inline std::string poly_to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const PolyRing& R = *f.ring();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    int64_t c = t.c;
    int64_t half = R.field().p() / 2;
    bool negative = c > half;
    int64_t mag = negative ? R.field().p() - c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    bool unit_mono = is_one(t.m, R.nvars());
    if (mag != 1 || unit_mono) {
      os << mag;
      if (!unit_mono) os << "*";
    }
    if (!unit_mono) os << mono_to_string(R, t.m);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing. Grammar:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer | ident ['^' integer]
// Whitespace is free. Errors carry the offset of the offending token.

struct ParseError : Error {
  ParseError(const std::string& msg, int pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  int position;
};

inline Polynomial parse_poly(const RingPtr& ring, const std::string& src) {
  const PolyRing& R = *ring;
  size_t i = 0;
  auto skip = [&] {
    while (i < src.size() && std::isspace(uint8_t(src[i]))) ++i;
  };
  auto parse_int = [&]() -> int64_t {
    size_t start = i;
    int64_t v = 0;
    while (i < src.size() && std::isdigit(uint8_t(src[i]))) {
      v = v * 10 + (src[i] - '0');
      if (v > (int64_t(1) << 60)) throw ParseError("integer too large", int(start));
      ++i;
    }
    if (i == start) throw ParseError("expected integer", int(i));
    return v;
  };
  auto parse_ident = [&]() -> std::string {
    size_t start = i;
    while (i < src.size() &&
           (std::isalnum(uint8_t(src[i])) || src[i] == '_')) ++i;
    return src.substr(start, i - start);
  };

  MPoly acc;
  skip();
  if (i == src.size()) throw ParseError("empty polynomial", 0);
  bool expect_term = true;
  int64_t sign = 1;
  while (true) {
    skip();
    if (i == src.size()) {
      if (expect_term) throw ParseError("trailing operator", int(i));
      break;
    }
    if (!expect_term) {
      if (src[i] == '+') {
        sign = 1;
        ++i;
        expect_term = true;
        continue;
      }
      if (src[i] == '-') {
        sign = -1;
        ++i;
        expect_term = true;
        continue;
      }
      throw ParseError(std::string("unexpected character '") + src[i] + "'",
                       int(i));
    }
    // leading sign inside a term position
    while (i < src.size() && (src[i] == '+' || src[i] == '-')) {
      if (src[i] == '-') sign = -sign;
      ++i;
      skip();
    }
    // term
    int64_t coef = 1;
    Expo m;
    bool any_factor = false;
    while (true) {
      skip();
      if (i < src.size() && std::isdigit(uint8_t(src[i]))) {
        coef = R.field().mul(R.field().reduce(coef),
                             R.field().reduce(parse_int()));
        any_factor = true;
      } else if (i < src.size() &&
                 (std::isalpha(uint8_t(src[i])) || src[i] == '_')) {
        size_t at = i;
        std::string name = parse_ident();
        int vi = R.var_index(name);
        if (vi < 0)
          throw ParseError("unknown variable '" + name + "'", int(at));
        int64_t pw = 1;
        skip();
        if (i < src.size() && src[i] == '^') {
          ++i;
          skip();
          pw = parse_int();
          if (pw < 0 || pw > 30000) throw ParseError("exponent out of range", int(i));
        }
        m[vi] = int16_t(m[vi] + pw);
        any_factor = true;
      } else {
        break;
      }
      skip();
      if (i < src.size() && src[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any_factor) throw ParseError("expected term", int(i));
    int64_t c = R.field().reduce(sign * R.field().reduce(coef));
    if (c != 0) acc.push_back(make_term(R, m, 0, c));
    sign = 1;
    expect_term = false;
  }
  mpoly_normalize(R, acc);
  return Polynomial(ring, std::move(acc));
}

}  // namespace reeslab
