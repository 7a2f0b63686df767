#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "knotmod/common.hpp"
#include "knotmod/laurent.hpp"
#include "knotmod/modular.hpp"

using namespace knotmod;

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

namespace {

// Jones polynomial of the twelve-crossing knot used as the running example
// throughout the suite.
const LaurentPoly& gamma_jones() {
  static const LaurentPoly v(Var::T, {{0, 1},
                                      {1, -3},
                                      {2, 6},
                                      {3, -9},
                                      {4, 12},
                                      {5, -12},
                                      {6, 12},
                                      {7, -9},
                                      {8, 6},
                                      {9, -3}});
  return v;
}

LaurentPoly random_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, 6);
  LaurentPoly q = LaurentPoly::zero(Var::T);
  const int d = deg(rng);
  for (int e = 0; e <= d; ++e) q.add_term(e, coeff(rng));
  return q;
}

}  // namespace

TEST_CASE("triviality verdicts") {
  const TrivialityVerdict v3 = is_n_trivial(gamma_jones(), 3);
  REQUIRE(v3.is_trivial);
  REQUIRE(v3.modulus == 3);
  REQUIRE_FALSE(v3.possibly_unknot);
  REQUIRE(v3.residue == LaurentPoly::one(Var::T));

  const TrivialityVerdict v2 = is_n_trivial(gamma_jones(), 2);
  REQUIRE_FALSE(v2.is_trivial);
  REQUIRE(render(v2.residue) == "1+t+t^3+t^7+t^9");

  const TrivialityVerdict unit = is_n_trivial(LaurentPoly::one(Var::T), 5);
  REQUIRE(unit.is_trivial);
  REQUIRE(unit.possibly_unknot);

  REQUIRE_THROWS_MATCHES(is_n_trivial(gamma_jones(), 1), InputError,
                         MessageMatches(ContainsSubstring("at least 2")));
}

TEST_CASE("trivial moduli enumeration") {
  const TrivialModuli g = trivial_moduli(gamma_jones());
  REQUIRE_FALSE(g.all);
  REQUIRE(g.moduli == std::vector<BigInt>{3});

  const LaurentPoly cubed = construct_power(gamma_jones(), 3, 2);
  const TrivialModuli g3 = trivial_moduli(cubed);
  REQUIRE(g3.moduli == std::vector<BigInt>{3, 9});

  const LaurentPoly fig8(Var::T, {{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}});
  REQUIRE(trivial_moduli(fig8).moduli.empty());
  REQUIRE_FALSE(trivial_moduli(fig8).all);

  REQUIRE(trivial_moduli(LaurentPoly::one(Var::T)).all);

  const LaurentPoly twelve(Var::T, {{0, 1}, {1, 12}});
  REQUIRE(trivial_moduli(twelve).moduli ==
          std::vector<BigInt>{2, 3, 4, 6, 12});
  const LaurentPoly thirtysix(Var::T, {{0, 1}, {1, 36}});
  REQUIRE(trivial_moduli(thirtysix).moduli ==
          std::vector<BigInt>{2, 3, 4, 6, 9, 12, 18, 36});
}

TEST_CASE("construct_power on the running example") {
  REQUIRE(construct_power(gamma_jones(), 3, 1) == gamma_jones());

  const LaurentPoly cubed = construct_power(gamma_jones(), 3, 2);
  REQUIRE(cubed == pow(gamma_jones(), 3));
  REQUIRE(reduce_mod(cubed, 9) == LaurentPoly::one(Var::T));
  REQUIRE(cubed.coeff(0) == 1);
  REQUIRE(cubed.coeff(1) == -9);
  REQUIRE(cubed.coeff(2) == 45);
  REQUIRE(cubed.coeff(14) == 40257);
  REQUIRE(cubed.coeff(15) == -41310);
  REQUIRE(cubed.coeff(25) == -567);
  REQUIRE(cubed.coeff(26) == 162);
  REQUIRE(cubed.coeff(27) == -27);

  const LaurentPoly two(Var::T, {{0, 1}, {1, 2}});
  const LaurentPoly fourth = construct_power(two, 2, 3);
  REQUIRE(render(fourth) == "1+8*t+24*t^2+32*t^3+16*t^4");
  REQUIRE(reduce_mod(fourth, 8) == LaurentPoly::one(Var::T));

  REQUIRE_THROWS_MATCHES(
      construct_power(LaurentPoly(Var::T, {{0, 1}, {1, 1}}), 2, 2), InputError,
      MessageMatches(ContainsSubstring("input not n-trivial")));
  REQUIRE_THROWS_MATCHES(construct_power(gamma_jones(), 3, 0), InputError,
                         MessageMatches(ContainsSubstring("at least 1")));
}

TEST_CASE("power lemma over random trivial inputs") {
  std::mt19937_64 rng(20250817);
  const LaurentPoly unit = LaurentPoly::one(Var::T);
  for (long long n = 2; n <= 6; ++n)
    for (long long k = 1; k <= 4; ++k)
      for (int trial = 0; trial < 2; ++trial) {
        const LaurentPoly v =
            unit + LaurentPoly::monomial(Var::T, 0, n) * random_q(rng);
        const LaurentPoly result = construct_power(v, n, k);
        const BigInt modulus = detail::int_pow(n, k);
        INFO("n=" << n << " k=" << k << " trial=" << trial);
        REQUIRE(reduce_mod(result, modulus) == unit);
        REQUIRE(pow_mod(v, detail::int_pow(n, k - 1), modulus) == unit);
        // A power of n^k-trivial stays n^j-trivial for every j below k.
        for (long long j = 1; j <= k; ++j)
          REQUIRE(is_n_trivial(result, static_cast<long long>(
                                           detail::int_pow(n, j)))
                      .is_trivial);
      }
}

TEST_CASE("gcd corollary combination") {
  const auto single = gcd_corollary_combine({{gamma_jones(), 3, 2}});
  REQUIRE(single.product == pow(gamma_jones(), 3));
  REQUIRE(single.modulus == 9);

  const auto pair = gcd_corollary_combine(
      {{gamma_jones(), 3, 1}, {gamma_jones(), 3, 2}});
  REQUIRE(pair.modulus == 3);
  REQUIRE(pair.product == pow(gamma_jones(), 4));
  REQUIRE(reduce_mod(pair.product, 3) == LaurentPoly::one(Var::T));

  const LaurentPoly two(Var::T, {{0, 1}, {1, 2}});
  const LaurentPoly three(Var::T, {{0, 1}, {1, 3}});
  const auto coprime = gcd_corollary_combine({{two, 2, 1}, {three, 3, 1}});
  REQUIRE(coprime.modulus == 1);
  REQUIRE(coprime.product == two * three);

  REQUIRE_THROWS_MATCHES(gcd_corollary_combine({}), InputError,
                         MessageMatches(ContainsSubstring("at least one")));
  REQUIRE_THROWS_MATCHES(
      gcd_corollary_combine({{three, 2, 1}}), InputError,
      MessageMatches(ContainsSubstring("input not n-trivial")));
}

TEST_CASE("composite obstruction scan") {
  const LaurentPoly cubed = construct_power(gamma_jones(), 3, 2);

  SECTION("the main grid is clean") {
    const auto violations =
        composite_obstruction_scan(gamma_jones(), 3, cubed, 9, 2, 2);
    REQUIRE(violations.empty());
  }

  SECTION("a detectable violation is reported") {
    // The cube of the 9-trivial polynomial is 1 mod 27, so (a, b) = (0, 3)
    // must show up; nothing smaller on that axis may.
    const auto violations =
        composite_obstruction_scan(gamma_jones(), 3, cubed, 9, 0, 3);
    REQUIRE(violations.size() == 1);
    REQUIRE(violations[0].a == 0);
    REQUIRE(violations[0].b == 3);
    REQUIRE(violations[0].residue == LaurentPoly::one(Var::T));
  }

  SECTION("small coprime moduli") {
    const LaurentPoly two(Var::T, {{0, 1}, {1, 2}});
    const LaurentPoly three(Var::T, {{0, 1}, {1, 3}});
    REQUIRE(composite_obstruction_scan(two, 2, three, 3, 3, 3).empty());
  }

  SECTION("preconditions") {
    REQUIRE_THROWS_MATCHES(
        composite_obstruction_scan(gamma_jones(), 3, cubed, 3, 2, 2),
        InputError, MessageMatches(ContainsSubstring("distinct moduli")));
    REQUIRE_THROWS_MATCHES(
        composite_obstruction_scan(gamma_jones(), 3,
                                   LaurentPoly(Var::T, {{0, 1}, {1, 1}}), 9, 2,
                                   2),
        InputError,
        MessageMatches(ContainsSubstring("input not n-trivial")));
  }
}

TEST_CASE("prime factor triviality") {
  REQUIRE(prime_factor_triviality(gamma_jones(), LaurentPoly::one(Var::T), 3));
  REQUIRE(prime_factor_triviality(gamma_jones(), pow(gamma_jones(), 2), 3));

  // Laurent units multiply to 1 without being 1; the evaluation constraint
  // alone cannot exclude them, and the function must answer false.
  const LaurentPoly t = LaurentPoly::monomial(Var::T, 1, 1);
  const LaurentPoly tinv = LaurentPoly::monomial(Var::T, -1, 1);
  REQUIRE_FALSE(prime_factor_triviality(t, tinv, 3));

  REQUIRE_THROWS_MATCHES(
      prime_factor_triviality(LaurentPoly(Var::T, {{0, 1}, {1, 1}}),
                              LaurentPoly::one(Var::T), 3),
      InputError, MessageMatches(ContainsSubstring("multiply to 1")));
  const LaurentPoly minus_one(Var::T, {{0, -1}});
  REQUIRE_THROWS_MATCHES(
      prime_factor_triviality(minus_one, minus_one, 3), InputError,
      MessageMatches(ContainsSubstring("evaluate to 1")));
  REQUIRE_THROWS_MATCHES(
      prime_factor_triviality(gamma_jones(), LaurentPoly::one(Var::T), 6),
      InputError, MessageMatches(ContainsSubstring("must be prime")));
}
