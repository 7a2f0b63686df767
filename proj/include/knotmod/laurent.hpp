#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knotmod/common.hpp"

namespace knotmod {

/// Which indeterminate a polynomial lives in. Tau is the bracket variable
/// (rendered as "A"), T is the Jones variable (rendered as "t"). Mixing the
/// two in one operation is a hard error, never a silent coercion.
enum class Var : std::uint8_t { Tau, T };

inline const char* var_letter(Var v) { return v == Var::Tau ? "A" : "t"; }

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
/// Canonical form: no zero coefficient is ever stored, so equality is plain
/// member-wise comparison.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  explicit LaurentPoly(Var v = Var::T) : var_(v) {}

  LaurentPoly(Var v, std::initializer_list<std::pair<int, BigInt>> ts)
      : var_(v) {
    for (const auto& [e, c] : ts) add_term(e, c);
  }

  static LaurentPoly zero(Var v) { return LaurentPoly(v); }

  static LaurentPoly one(Var v) { return monomial(v, 0, 1); }

  static LaurentPoly monomial(Var v, int exp, const BigInt& coeff) {
    LaurentPoly p(v);
    p.add_term(exp, coeff);
    return p;
  }

  Var var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  BigInt coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  int min_exp() const {
    if (terms_.empty()) throw InputError("min_exp of zero polynomial");
    return terms_.begin()->first;
  }

  int max_exp() const {
    if (terms_.empty()) throw InputError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
  }

  /// Adds c*x^e, erasing the term if the sum cancels.
  void add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const LaurentPoly& o) const {
    return var_ == o.var_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

 private:
  Var var_;
  Terms terms_;
};

namespace detail {

inline void require_same_var(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.var() != q.var()) throw InputError("variable mismatch");
}

// Least nonnegative residue; works for negative values too.
inline BigInt nonneg_mod(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace detail

inline LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
  detail::require_same_var(p, q);
  LaurentPoly r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, c);
  return r;
}

inline LaurentPoly neg(const LaurentPoly& p) {
  LaurentPoly r(p.var());
  for (const auto& [e, c] : p.terms()) r.add_term(e, -c);
  return r;
}

inline LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) {
  return add(p, neg(q));
}

inline LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
  detail::require_same_var(p, q);
  LaurentPoly r(p.var());
  if (p.is_zero() || q.is_zero()) return r;

  const long span = static_cast<long>(p.max_exp()) - p.min_exp() +
                    static_cast<long>(q.max_exp()) - q.min_exp() + 1;
  constexpr long kDenseLimit = 1L << 22;
  if (span <= kDenseLimit) {
    // Dense convolution; the products that show up here (bracket state sums,
    // Jones powers) are dense in practice, and this avoids a log factor per
    // accumulated term.
    const int off = p.min_exp() + q.min_exp();
    std::vector<BigInt> acc(static_cast<std::size_t>(span));
    for (const auto& [e1, c1] : p.terms())
      for (const auto& [e2, c2] : q.terms())
        acc[static_cast<std::size_t>(e1 + e2 - off)] += c1 * c2;
    for (long i = 0; i < span; ++i)
      if (acc[static_cast<std::size_t>(i)] != 0)
        r.add_term(static_cast<int>(i + off), acc[static_cast<std::size_t>(i)]);
  } else {
    for (const auto& [e1, c1] : p.terms())
      for (const auto& [e2, c2] : q.terms()) r.add_term(e1 + e2, c1 * c2);
  }
  return r;
}

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  return add(p, q);
}
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  return sub(p, q);
}
inline LaurentPoly operator-(const LaurentPoly& p) { return neg(p); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  return mul(p, q);
}

/// P^m by binary exponentiation. P^0 = 1 in P's variable.
inline LaurentPoly pow(const LaurentPoly& p, const BigInt& m) {
  if (m < 0) throw InputError("pow exponent must be nonnegative");
  LaurentPoly result = LaurentPoly::one(p.var());
  LaurentPoly base = p;
  BigInt e = m;
  while (e > 0) {
    if ((e & 1) != 0) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

/// Substitutes the variable by its inverse, negating every exponent.
inline LaurentPoly invert_variable(const LaurentPoly& p) {
  LaurentPoly out = LaurentPoly::zero(p.var());
  for (const auto& [e, c] : p.terms()) out.add_term(-e, c);
  return out;
}

/// Every coefficient replaced by its least nonnegative residue mod n (n >= 1).
inline LaurentPoly reduce_mod(const LaurentPoly& p, const BigInt& n) {
  if (n < 1) throw InputError("modulus must be a positive integer");
  LaurentPoly r(p.var());
  for (const auto& [e, c] : p.terms()) r.add_term(e, detail::nonneg_mod(c, n));
  return r;
}

namespace detail {

// Modular power over dense int64 coefficient arrays. Valid whenever the
// accumulator cannot overflow: terms * (n-1)^2 < 2^63.
inline LaurentPoly pow_mod_dense(const LaurentPoly& p, BigInt e,
                                 std::int64_t n, Var v) {
  const long pmin = p.min_exp(), pmax = p.max_exp();
  // Final exponent range, used to size every intermediate buffer once.
  // (Intermediate squarings stay inside the final range scaled by e.)
  struct DensePoly {
    long min;                        // exponent of coefficient 0
    std::vector<std::int64_t> c;     // dense coefficients
  };
  auto trim = [](DensePoly& d) {
    std::size_t lo = 0, hi = d.c.size();
    while (lo < hi && d.c[lo] == 0) ++lo;
    while (hi > lo && d.c[hi - 1] == 0) --hi;
    d.min += static_cast<long>(lo);
    d.c = std::vector<std::int64_t>(d.c.begin() + static_cast<long>(lo),
                                    d.c.begin() + static_cast<long>(hi));
  };
  auto mulmod = [&](const DensePoly& a, const DensePoly& b) {
    DensePoly out;
    if (a.c.empty() || b.c.empty()) {
      out.min = 0;
      return out;
    }
    out.min = a.min + b.min;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        out.c[i + j] += a.c[i] * b.c[j];
    }
    for (auto& x : out.c) x %= n;
    trim(out);
    return out;
  };

  DensePoly base;
  base.min = pmin;
  base.c.assign(static_cast<std::size_t>(pmax - pmin + 1), 0);
  for (const auto& [ex, co] : p.terms())
    base.c[static_cast<std::size_t>(ex - pmin)] =
        static_cast<std::int64_t>(nonneg_mod(co, n));
  trim(base);

  DensePoly acc;
  acc.min = 0;
  acc.c = {1 % n};
  while (e > 0) {
    if ((e & 1) != 0) acc = mulmod(acc, base);
    e >>= 1;
    if (e > 0 && !base.c.empty()) base = mulmod(base, base);
    if (acc.c.empty()) break;  // collapsed to zero mod n
  }

  LaurentPoly r(v);
  for (std::size_t i = 0; i < acc.c.size(); ++i) {
    std::int64_t c = acc.c[i] % n;
    if (c < 0) c += n;
    if (c != 0) r.add_term(static_cast<int>(acc.min + static_cast<long>(i)), c);
  }
  return r;
}

}  // namespace detail

/// P^m mod n: same value as reduce_mod(pow(P, m), n) but with coefficients
/// reduced at every step, so it stays cheap for large m.
inline LaurentPoly pow_mod(const LaurentPoly& p, const BigInt& m,
                           const BigInt& n) {
  if (m < 0) throw InputError("pow exponent must be nonnegative");
  if (n < 1) throw InputError("modulus must be a positive integer");
  LaurentPoly base = reduce_mod(p, n);
  if (base.is_zero() || m == 0)
    return reduce_mod(m == 0 ? LaurentPoly::one(p.var()) : base, n);

  const BigInt projected_span =
      BigInt(static_cast<long>(base.max_exp()) - base.min_exp()) * m + 1;
  if (n <= 1000000 && projected_span <= (1L << 22)) {
    // terms * (n-1)^2 <= 2^22 * 10^12 < 2^63: no overflow.
    return detail::pow_mod_dense(base, m, static_cast<std::int64_t>(n),
                                 p.var());
  }
  LaurentPoly result = reduce_mod(LaurentPoly::one(p.var()), n);
  BigInt e = m;
  while (e > 0) {
    if ((e & 1) != 0) result = reduce_mod(mul(result, base), n);
    e >>= 1;
    if (e > 0) base = reduce_mod(mul(base, base), n);
  }
  return result;
}

/// Exact evaluation at a nonzero rational point.
inline BigRational evaluate(const LaurentPoly& p, const BigRational& x) {
  if (x == 0) throw InputError("evaluate at zero is undefined");
  if (p.is_zero()) return BigRational(0);
  BigRational val = 0;
  long cur = p.min_exp();
  // x^min_exp, exponent possibly negative.
  BigRational xp = 1;
  {
    BigRational b = cur < 0 ? BigRational(1) / x : x;
    long k = cur < 0 ? -cur : cur;
    while (k > 0) {
      if (k & 1) xp *= b;
      b *= b;
      k >>= 1;
    }
  }
  for (const auto& [e, c] : p.terms()) {
    while (cur < e) {
      xp *= x;
      ++cur;
    }
    val += BigRational(c) * xp;
  }
  return val;
}

/// Normalizes a Kauffman bracket into the Jones variable:
/// multiplies by (-tau^3)^(-w) and substitutes tau = t^(-1/4).
/// Every exponent must come out divisible by 4, otherwise the bracket did
/// not come from a knot diagram.
inline LaurentPoly tau_to_t(const LaurentPoly& bracket, long writhe) {
  if (bracket.var() != Var::Tau) throw InputError("variable mismatch");
  const bool flip = (writhe % 2) != 0;  // (-1)^(-w)
  LaurentPoly out(Var::T);
  for (const auto& [e, c] : bracket.terms()) {
    const long m = static_cast<long>(e) - 3 * writhe;
    if (m % 4 != 0) throw InputError("non-knot input");
    out.add_term(static_cast<int>(-m / 4), flip ? -c : c);
  }
  return out;
}

/// gcd of the coefficients of P - 1; ALL (nullopt) when P == 1 exactly,
/// meaning every modulus works.
inline std::optional<BigInt> content_minus_one(const LaurentPoly& p) {
  if (p.var() != Var::T) throw InputError("variable mismatch");
  LaurentPoly q = sub(p, LaurentPoly::one(Var::T));
  if (q.is_zero()) return std::nullopt;
  BigInt g = 0;
  for (const auto& [e, c] : q.terms())
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
  return g;
}

/// Canonical text form, the golden-file contract: ascending exponents,
/// "c*t^e" terms joined by +/-, exponent 0 bare, exponent 1 as plain "t",
/// unit coefficients drop the "1*". The tau variable renders as "A".
inline std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const char* x = var_letter(p.var());
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? '-' : '+');
    }
    const BigInt mag = boost::multiprecision::abs(c);
    if (e == 0) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << '*';
      os << x;
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace knotmod
