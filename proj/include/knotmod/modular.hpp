// Triviality of Jones polynomials modulo integers, and the constructive
// machinery that turns one n-trivial knot into n^k-trivial connected-sum
// powers. Everything here works on polynomials; whether a polynomial came
// from a genuinely knotted diagram is the caller's concern.

#pragma once

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotmod/arith.hpp"
#include "knotmod/common.hpp"
#include "knotmod/laurent.hpp"

namespace knotmod {

struct TrivialityVerdict {
  long long modulus = 0;
  bool is_trivial = false;
  // Set when the input polynomial is exactly 1: triviality is only defined
  // for nontrivial knots, and the unknot cannot be ruled out here.
  bool possibly_unknot = false;
  LaurentPoly residue;
};

inline TrivialityVerdict is_n_trivial(const LaurentPoly& v, long long n) {
  if (n < 2) throw InputError("triviality modulus must be at least 2");
  TrivialityVerdict verdict;
  verdict.modulus = n;
  verdict.residue = reduce_mod(v, n);
  verdict.is_trivial = verdict.residue == LaurentPoly::one(v.var());
  verdict.possibly_unknot = v == LaurentPoly::one(v.var());
  return verdict;
}

struct TrivialModuli {
  // True when every modulus works (the polynomial is exactly 1).
  bool all = false;
  std::vector<BigInt> moduli;
};

// Every n >= 2 with V congruent to 1 mod n, in increasing order. These are
// exactly the divisors >= 2 of the content of V - 1.
inline TrivialModuli trivial_moduli(const LaurentPoly& v) {
  TrivialModuli out;
  const auto content = content_minus_one(v);
  if (!content) {
    out.all = true;
    return out;
  }
  const BigInt c = *content;
  std::vector<BigInt> high;  // divisors above sqrt(c), collected decreasing
  if (c >= 2) high.push_back(c);
  for (BigInt d = 2; d * d <= c; ++d) {
    if (c % d != 0) continue;
    out.moduli.push_back(d);
    if (d * d != c) high.push_back(c / d);
  }
  out.moduli.insert(out.moduli.end(), high.rbegin(), high.rend());
  return out;
}

namespace detail {

inline BigInt int_pow(long long base, long long exp) {
  BigInt r = 1;
  for (long long j = 0; j < exp; ++j) r *= base;
  return r;
}

}  // namespace detail

// V^(n^(k-1)), computed exactly. The congruence result == 1 mod n^k is
// rechecked internally; a failure there would disprove the underlying
// lemma, so it surfaces as an internal error rather than bad input.
inline LaurentPoly construct_power(const LaurentPoly& v, long long n,
                                   long long k) {
  if (k < 1) throw InputError("power index k must be at least 1");
  if (!is_n_trivial(v, n).is_trivial) throw InputError("input not n-trivial");
  const BigInt exponent = detail::int_pow(n, k - 1);
  if (exponent > (1 << 20)) throw InputError("power exponent too large");
  const LaurentPoly result = pow(v, exponent);
  const BigInt modulus = detail::int_pow(n, k);
  if (reduce_mod(result, modulus) != LaurentPoly::one(v.var()))
    throw InternalCheckError("constructed power is not 1 modulo n^k");
  return result;
}

struct CombineItem {
  LaurentPoly v;
  long long m = 0;
  long long k = 1;
};

struct CombineResult {
  LaurentPoly product;
  BigInt modulus;
};

// Product of the individual power constructions, congruent to 1 modulo the
// gcd of the m_i^(k_i).
inline CombineResult gcd_corollary_combine(const std::vector<CombineItem>& items) {
  if (items.empty()) throw InputError("combine needs at least one item");
  LaurentPoly product = LaurentPoly::one(items.front().v.var());
  BigInt g = 0;
  for (const auto& item : items) {
    product = product * construct_power(item.v, item.m, item.k);
    g = boost::multiprecision::gcd(g, detail::int_pow(item.m, item.k));
  }
  // Compare via the difference so the degenerate modulus 1 stays correct.
  if (!reduce_mod(product - LaurentPoly::one(product.var()), g).is_zero())
    throw InternalCheckError("combined product is not 1 modulo the gcd");
  return {product, g};
}

struct ObstructionWitness {
  long long a = 0;
  long long b = 0;
  LaurentPoly residue;
};

// Scans V1^a * V2^b over the (a, b) grid and reports every pair that IS
// congruent to 1 modulo m1*m2. An empty result confirms the obstruction on
// the scanned range; the empty product (0, 0) is excluded by design.
inline std::vector<ObstructionWitness> composite_obstruction_scan(
    const LaurentPoly& v1, long long m1, const LaurentPoly& v2, long long m2,
    long long a_max, long long b_max) {
  if (m1 == m2) throw InputError("obstruction scan needs two distinct moduli");
  if (!is_n_trivial(v1, m1).is_trivial || !is_n_trivial(v2, m2).is_trivial)
    throw InputError("input not n-trivial");
  if (a_max < 0 || b_max < 0)
    throw InputError("scan bounds must be nonnegative");
  detail::require_same_var(v1, v2);
  const BigInt modulus = BigInt(m1) * m2;
  const LaurentPoly unit = LaurentPoly::one(v1.var());

  std::vector<LaurentPoly> pow1{unit}, pow2{unit};
  for (long long a = 1; a <= a_max; ++a)
    pow1.push_back(reduce_mod(pow1.back() * v1, modulus));
  for (long long b = 1; b <= b_max; ++b)
    pow2.push_back(reduce_mod(pow2.back() * v2, modulus));

  std::vector<ObstructionWitness> violations;
  for (long long a = 0; a <= a_max; ++a)
    for (long long b = 0; b <= b_max; ++b) {
      if (a == 0 && b == 0) continue;
      LaurentPoly residue = reduce_mod(
          pow1[static_cast<std::size_t>(a)] * pow2[static_cast<std::size_t>(b)],
          modulus);
      if (residue == unit)
        violations.push_back({a, b, std::move(residue)});
    }
  return violations;
}

// Polynomial shadow of the prime-factor argument: when V1*V2 is 1 mod a
// prime p and both factors evaluate to 1 at t = 1 (mod p), each factor must
// itself be 1 mod p. Returns the conclusion as a checked boolean.
inline bool prime_factor_triviality(const LaurentPoly& v1,
                                    const LaurentPoly& v2, long long p) {
  if (!is_prime(p)) throw InputError("p must be prime");
  detail::require_same_var(v1, v2);
  const LaurentPoly unit = LaurentPoly::one(v1.var());
  if (reduce_mod(v1 * v2, p) != unit)
    throw InputError("factors do not multiply to 1 modulo p");
  for (const LaurentPoly* v : {&v1, &v2}) {
    const BigRational at_one = evaluate(*v, 1);
    if (boost::multiprecision::denominator(at_one) != 1 ||
        detail::nonneg_mod(boost::multiprecision::numerator(at_one) - 1, p) !=
            0)
      throw InputError("factor does not evaluate to 1 at t=1 modulo p");
  }
  return reduce_mod(v1, p) == unit && reduce_mod(v2, p) == unit;
}

}  // namespace knotmod
