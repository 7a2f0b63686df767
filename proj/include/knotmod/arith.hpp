// Number-theoretic substrate: p-adic valuations, base-p digit sums,
// factorial valuations in closed form, exact binomial coefficients, and the
// divisibility witnesses used by the power-construction module.

#pragma once

#include <cstdlib>

#include "knotmod/common.hpp"

namespace knotmod {

// Trial division. Inputs here are small (CLI-sized primes), so this is both
// adequate and easy to trust.
inline bool is_prime(long long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long long d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Largest e such that p^e divides m. Requires m >= 1 and p prime; the zero
// case would be an infinite valuation.
inline long long p_adic_valuation(const BigInt& m, long long p) {
  if (!is_prime(p)) throw InputError("valuation base must be prime");
  if (m <= 0) throw InputError("valuation needs a positive integer");
  BigInt rest = m;
  long long e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  return e;
}

// Sum of the digits of k written in base p.
inline long long digit_sum(long long k, long long p) {
  if (p < 2) throw InputError("digit base must be at least 2");
  if (k < 0) throw InputError("digit sum needs a nonnegative integer");
  long long sum = 0;
  for (; k > 0; k /= p) sum += k % p;
  return sum;
}

// Valuation of k! at a prime p without forming the factorial:
// v_p(k!) = (k - s_p(k)) / (p - 1).
inline long long factorial_valuation(long long k, long long p) {
  if (!is_prime(p)) throw InputError("valuation base must be prime");
  if (k < 0) throw InputError("factorial valuation needs a nonnegative integer");
  return (k - digit_sum(k, p)) / (p - 1);
}

// Exact C(a, b); zero when b > a. The loop divides after each multiply, and
// every intermediate quotient is itself a binomial coefficient, so the
// divisions are exact.
inline BigInt binomial(const BigInt& a, const BigInt& b) {
  if (a < 0 || b < 0) throw InputError("binomial needs nonnegative integers");
  if (b > a) return 0;
  const BigInt reduced = (b > a - b) ? a - b : b;
  if (reduced > 1000000) throw InputError("binomial arguments too large");
  const auto steps = static_cast<unsigned long long>(reduced);
  BigInt result = 1;
  for (unsigned long long j = 0; j < steps; ++j) {
    result *= a - static_cast<long long>(j);
    result /= static_cast<long long>(j + 1);
  }
  return result;
}

struct ArithWitness {
  long long n = 0;
  long long k = 0;
  long long i = 0;
  BigInt binomial_value;
  BigInt required_divisor;
  bool divides = false;
};

// Witness for the claim that n^(k-i) divides C(n^(k-1), i) whenever
// n, k >= 2 and 1 <= i <= k-1. A false witness would be a counterexample.
inline ArithWitness binome_divisibility(long long n, long long k, long long i) {
  if (n < 2) throw InputError("binome parameter n must be at least 2");
  if (k < 2) throw InputError("binome parameter k must be at least 2");
  if (i < 1 || i > k - 1) throw InputError("binome parameter i must lie in [1, k-1]");
  BigInt top = 1;
  for (long long j = 0; j < k - 1; ++j) top *= n;
  BigInt divisor = 1;
  for (long long j = 0; j < k - i; ++j) divisor *= n;
  ArithWitness w;
  w.n = n;
  w.k = k;
  w.i = i;
  w.binomial_value = binomial(top, BigInt(i));
  w.required_divisor = divisor;
  w.divides = w.binomial_value % divisor == 0;
  return w;
}

// True iff v_p(k!) <= k - 1. Expected to hold for every k >= 1; the p = 2
// case is tight exactly when k is a power of two.
inline bool factorial_valuation_bound_check(long long k, long long p) {
  if (k < 1) throw InputError("bound check needs k >= 1");
  return factorial_valuation(k, p) <= k - 1;
}

}  // namespace knotmod
