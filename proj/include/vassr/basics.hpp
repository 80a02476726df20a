#pragma once

// Shared numeric foundations: arbitrary-precision integers/rationals,
// small integer vectors, norms, and a tagged "natural number or infinity"
// used as a length cap by the set-algebra types.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vassr {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// L1 norm of a vector, the paper-standard size measure for effects.
inline Int norm1(const IntVec& v) {
  Int s = 0;
  for (const Int& x : v) s += abs_int(x);
  return s;
}

// L-infinity norm, used by the distance predicates.
inline Int norm_inf(const IntVec& v) {
  Int m = 0;
  for (const Int& x : v) m = std::max(m, abs_int(x));
  return m;
}

inline IntVec add_vec(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec sub_vec(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec scale_vec(const Int& k, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

inline IntVec neg_vec(const IntVec& a) { return scale_vec(Int(-1), a); }

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool all_nonneg(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

inline bool all_positive(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x > 0; });
}

inline bool is_zero_vec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Componentwise order tests used by minimality/antichain logic.
inline bool leq_vec(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline IntVec zero_vec(std::size_t d) { return IntVec(d, Int(0)); }

inline IntVec ones_vec(std::size_t d) { return IntVec(d, Int(1)); }

inline std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

// Integer power for arbitrary-precision bases and machine exponents.
inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Natural number or infinity; a dedicated tagged value, never a sentinel,
// so cap arithmetic cannot overflow or alias a real count.
class ExtNat {
 public:
  ExtNat() : finite_(true), value_(0) {}
  explicit ExtNat(Int v) : finite_(true), value_(std::move(v)) {
    if (value_ < 0) throw std::invalid_argument("ExtNat: negative value");
  }
  static ExtNat infinity() {
    ExtNat e;
    e.finite_ = false;
    return e;
  }
  bool is_finite() const { return finite_; }
  const Int& value() const {
    if (!finite_) throw std::logic_error("ExtNat: value() of infinity");
    return value_;
  }
  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator<(const ExtNat& a, const ExtNat& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtNat& a, const ExtNat& b) {
    return a == b || a < b;
  }
  ExtNat operator+(const Int& k) const {
    if (!finite_) return *this;
    return ExtNat(value_ + k);
  }
  std::string to_string() const { return finite_ ? value_.get_str() : "inf"; }

 private:
  bool finite_;
  Int value_;
};

// gcd/lcm helpers over mpz.
inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Scale a rational vector to its primitive integer direction (for rays).
inline IntVec primitive_direction(const RatVec& v) {
  Int l = 1;
  for (const Rat& q : v) l = lcm_int(l, q.get_den());
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(l);
    scaled.canonicalize();
    w[i] = scaled.get_num();
  }
  Int g = 0;
  for (const Int& x : w) g = gcd_int(g, x);
  if (g > 1)
    for (Int& x : w) x /= g;
  return w;
}

inline IntVec primitive_int(IntVec w) {
  Int g = 0;
  for (const Int& x : w) g = gcd_int(g, x);
  if (g > 1)
    for (Int& x : w) x /= g;
  return w;
}

// Rank over Q of a list of integer vectors (fraction-free elimination).
inline int rank_of(std::vector<IntVec> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  std::size_t d = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Int a = rows[r][c], b = rows[i][c];
      for (std::size_t j = 0; j < d; ++j)
        rows[i][j] = rows[i][j] * a - rows[r][j] * b;
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace vassr
