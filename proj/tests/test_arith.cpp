#include <catch2/catch_amalgamated.hpp>

#include "knotmod/arith.hpp"
#include "knotmod/common.hpp"

using namespace knotmod;

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

namespace {

// Independent oracle: v_p(k!) as the classical floor sum over prime powers.
long long floor_sum_valuation(long long k, long long p) {
  long long total = 0;
  for (long long q = p; q <= k; q *= p) {
    total += k / q;
    if (q > k / p) break;  // next q would overflow past k anyway
  }
  return total;
}

BigInt factorial(long long k) {
  BigInt f = 1;
  for (long long j = 2; j <= k; ++j) f *= j;
  return f;
}

}  // namespace

TEST_CASE("primality by trial division") {
  REQUIRE(is_prime(2));
  REQUIRE(is_prime(3));
  REQUIRE(is_prime(13));
  REQUIRE(is_prime(1000003));
  REQUIRE_FALSE(is_prime(0));
  REQUIRE_FALSE(is_prime(1));
  REQUIRE_FALSE(is_prime(4));
  REQUIRE_FALSE(is_prime(1000001));  // 101 * 9901
  REQUIRE_FALSE(is_prime(-7));
}

TEST_CASE("p-adic valuation basics") {
  REQUIRE(p_adic_valuation(1, 2) == 0);
  REQUIRE(p_adic_valuation(54, 3) == 3);
  REQUIRE(p_adic_valuation(BigInt(5 * 5 * 5 * 5), 5) == 4);
  REQUIRE(p_adic_valuation(7, 3) == 0);

  BigInt big = 1;
  for (int j = 0; j < 40; ++j) big *= 3;
  REQUIRE(p_adic_valuation(big * 14, 3) == 40);

  REQUIRE_THROWS_MATCHES(
      p_adic_valuation(0, 3), InputError,
      MessageMatches(ContainsSubstring("positive integer")));
  REQUIRE_THROWS_MATCHES(p_adic_valuation(-9, 3), InputError,
                         MessageMatches(ContainsSubstring("positive")));
  REQUIRE_THROWS_MATCHES(p_adic_valuation(12, 4), InputError,
                         MessageMatches(ContainsSubstring("must be prime")));
}

TEST_CASE("digit sums") {
  REQUIRE(digit_sum(0, 2) == 0);
  REQUIRE(digit_sum(10, 2) == 2);   // 1010
  REQUIRE(digit_sum(26, 3) == 6);   // 222
  REQUIRE(digit_sum(1000, 10) == 1);
  REQUIRE(digit_sum(999, 10) == 27);
  REQUIRE_THROWS_MATCHES(digit_sum(5, 1), InputError,
                         MessageMatches(ContainsSubstring("at least 2")));
  REQUIRE_THROWS_MATCHES(digit_sum(-1, 2), InputError,
                         MessageMatches(ContainsSubstring("nonnegative")));
}

TEST_CASE("factorial valuation closed form") {
  REQUIRE(factorial_valuation(0, 7) == 0);
  REQUIRE(factorial_valuation(10, 2) == 8);
  REQUIRE(factorial_valuation(100, 5) == 24);
  REQUIRE_THROWS_MATCHES(factorial_valuation(10, 6), InputError,
                         MessageMatches(ContainsSubstring("must be prime")));
}

TEST_CASE("factorial valuation agrees with the floor sum") {
  for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL})
    for (long long k = 0; k <= 500; ++k)
      REQUIRE(factorial_valuation(k, p) == floor_sum_valuation(k, p));
}

TEST_CASE("factorial valuation agrees with the factorial itself") {
  for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL})
    for (long long k = 1; k <= 50; ++k)
      REQUIRE(factorial_valuation(k, p) == p_adic_valuation(factorial(k), p));
}

TEST_CASE("binomial coefficients") {
  REQUIRE(binomial(0, 0) == 1);
  REQUIRE(binomial(17, 0) == 1);
  REQUIRE(binomial(9, 2) == 36);
  REQUIRE(binomial(BigInt(1) << 20, 1) == BigInt(1) << 20);
  REQUIRE(binomial(52, 5) == 2598960);
  REQUIRE(binomial(10, 11) == 0);
  REQUIRE(binomial(30, 12) == binomial(30, 18));
  REQUIRE_THROWS_MATCHES(binomial(-1, 2), InputError,
                         MessageMatches(ContainsSubstring("nonnegative")));
  REQUIRE_THROWS_MATCHES(binomial(5, -2), InputError,
                         MessageMatches(ContainsSubstring("nonnegative")));
}

TEST_CASE("binomial Pascal identity") {
  for (int a = 1; a <= 40; ++a)
    for (int b = 1; b <= a; ++b)
      REQUIRE(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("binome divisibility witnesses") {
  const ArithWitness w1 = binome_divisibility(3, 3, 2);
  REQUIRE(w1.binomial_value == 36);
  REQUIRE(w1.required_divisor == 3);
  REQUIRE(w1.divides);

  const ArithWitness w2 = binome_divisibility(2, 4, 1);
  REQUIRE(w2.binomial_value == 8);
  REQUIRE(w2.required_divisor == 8);
  REQUIRE(w2.divides);

  const ArithWitness w3 = binome_divisibility(10, 2, 1);
  REQUIRE(w3.binomial_value == 10);
  REQUIRE(w3.required_divisor == 10);
  REQUIRE(w3.divides);

  SECTION("exhaustive sweep over small parameters") {
    for (long long n = 2; n <= 10; ++n)
      for (long long k = 2; k <= 6; ++k)
        for (long long i = 1; i <= k - 1; ++i) {
          const ArithWitness w = binome_divisibility(n, k, i);
          INFO("n=" << n << " k=" << k << " i=" << i);
          REQUIRE(w.divides);
          REQUIRE(w.binomial_value % w.required_divisor == 0);
        }
  }

  SECTION("parameter ranges are enforced") {
    REQUIRE_THROWS_MATCHES(binome_divisibility(1, 3, 1), InputError,
                           MessageMatches(ContainsSubstring("n must be")));
    REQUIRE_THROWS_MATCHES(binome_divisibility(3, 1, 1), InputError,
                           MessageMatches(ContainsSubstring("k must be")));
    REQUIRE_THROWS_MATCHES(binome_divisibility(3, 3, 0), InputError,
                           MessageMatches(ContainsSubstring("[1, k-1]")));
    REQUIRE_THROWS_MATCHES(binome_divisibility(3, 3, 3), InputError,
                           MessageMatches(ContainsSubstring("[1, k-1]")));
  }
}

TEST_CASE("factorial valuation bound") {
  REQUIRE(factorial_valuation_bound_check(1, 2));
  REQUIRE(factorial_valuation(8, 2) == 7);  // tight: equals k - 1
  REQUIRE(factorial_valuation_bound_check(8, 2));
  REQUIRE(factorial_valuation(9, 3) == 4);
  REQUIRE(factorial_valuation_bound_check(9, 3));

  for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL})
    for (long long k = 1; k <= 500; ++k)
      REQUIRE(factorial_valuation_bound_check(k, p));

  SECTION("tightness at p = 2 happens exactly at powers of two") {
    for (long long k = 1; k <= 500; ++k) {
      const bool tight = factorial_valuation(k, 2) == k - 1;
      REQUIRE(tight == (digit_sum(k, 2) == 1));
    }
  }

  REQUIRE_THROWS_MATCHES(factorial_valuation_bound_check(0, 2), InputError,
                         MessageMatches(ContainsSubstring("k >= 1")));
}
