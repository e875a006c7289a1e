#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sporadic/exact.hpp"

using namespace sporadic;

TEST_CASE("make_rat canonicalizes and signs the denominator") {
  BigRat q = make_rat(BigInt(6), BigInt(-8));
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 4);
  CHECK(make_rat(BigInt(0), BigInt(5)) == 0);
  CHECK_THROWS_AS(make_rat(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("integer and rational powers") {
  CHECK(pow_int(BigInt(3), 0) == 1);
  CHECK(pow_int(BigInt(0), 0) == 1);
  CHECK(pow_int(BigInt(-2), 5) == -32);
  CHECK(pow_rat(BigRat(3, 4), 2) == BigRat(9, 16));
  CHECK(pow_rat(BigRat(3, 4), -2) == BigRat(16, 9));
  CHECK(pow_rat(BigRat(5), 0) == 1);
  CHECK_THROWS_AS(pow_rat(BigRat(0), -1), std::domain_error);
}

TEST_CASE("deterministic primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(561));              // Carmichael
  CHECK(is_prime(97));
  CHECK(is_prime(2147483647));             // 2^31 - 1
  CHECK_FALSE(is_prime(2147483647ULL * 2147483647ULL));
  CHECK(is_prime(18446744073709551557ULL));  // largest prime below 2^64
  CHECK_FALSE(is_prime(18446744073709551615ULL));
  CHECK_THROWS_AS(require_prime(12), std::invalid_argument);
  CHECK_NOTHROW(require_prime(13));
}

TEST_CASE("p-adic valuation") {
  CHECK(vp(BigInt(250), 5) == 3);
  CHECK(vp(BigInt(-250), 5) == 3);
  CHECK(vp(BigInt(7), 5) == 0);
  CHECK(vp(BigRat(27, 32), 3) == 3);
  CHECK(vp(BigRat(27, 32), 2) == -5);
  CHECK_THROWS_AS(vp(BigInt(0), 5), std::domain_error);
  CHECK_THROWS_AS(vp(BigInt(10), 10), std::invalid_argument);
}

TEST_CASE("vp_diff reports an infinite valuation as empty") {
  CHECK(vp_diff(BigInt(5), BigInt(5), 7) == std::nullopt);
  CHECK(vp_diff(BigInt(54), BigInt(5), 7).value() == 2);
  CHECK(vp_diff(BigRat(1, 3), BigRat(1, 3), 5) == std::nullopt);
  CHECK(vp_diff(BigRat(27, 32), BigRat(0), 2).value() == -5);
}

TEST_CASE("congruence bound predicate") {
  CHECK(congruent_mod_prime_power(BigInt(819005), BigInt(5), 5, 3));  // apery A(5) = A(1) mod 125
  CHECK_FALSE(congruent_mod_prime_power(BigInt(819005), BigInt(5), 5, 4));
  CHECK(congruent_mod_prime_power(BigInt(9), BigInt(9), 5, 100));      // vacuous
  CHECK(congruent_mod_prime_power(BigRat(1, 2), BigRat(13, 2), 3, 1));
}

TEST_CASE("prime power residues") {
  PrimePowerResidue r = reduce_mod_prime_power(BigInt(-1), 5, 3);
  CHECK(r.value == 124);
  CHECK(r.modulus() == 125);
  CHECK(reduce_mod_prime_power(BigInt(250), 5, 3).value == 0);

  // 3/4 and 32 are the same 5-adic residue mod 125: 3 * inverse(4) = 3*94 = 282 = 32.
  CHECK(reduce_mod_prime_power(BigRat(3, 4), 5, 3) == reduce_mod_prime_power(BigInt(32), 5, 3));
  CHECK_THROWS_AS(reduce_mod_prime_power(BigRat(1, 5), 5, 3), std::domain_error);
}

TEST_CASE("unit inverses modulo prime powers") {
  CHECK(unit_inverse(BigInt(4), 5, 3).value == 94);  // 4*94 = 376 = 3*125 + 1
  CHECK(unit_inverse(BigInt(5), 3, 3).value == 11);  // 5*11 = 55 = 2*27 + 1
  CHECK_THROWS_AS(unit_inverse(BigInt(10), 5, 2), std::domain_error);
  CHECK_THROWS_AS(unit_inverse(BigInt(0), 5, 2), std::domain_error);
}

TEST_CASE("residue arithmetic is consistent with direct reduction") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    for (long x = -30; x <= 30; ++x) {
      if (x == 0) continue;
      auto r = reduce_mod_prime_power(BigInt(x), p, 2);
      CHECK(r.value >= 0);
      CHECK(r.value < r.modulus());
      CHECK((BigInt(x) - r.value) % r.modulus() == 0);
      if (x % static_cast<long>(p) != 0) {
        auto inv = unit_inverse(BigInt(x), p, 2);
        CHECK(reduce_mod_prime_power(BigInt(inv.value * x), p, 2).value == 1);
      }
    }
  }
}
