#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>

namespace sporadic {

using BigInt = mpz_class;
using BigRat = mpq_class;

// num/den in lowest terms with positive denominator. Throws std::domain_error
// on a zero denominator.
BigRat make_rat(BigInt num, BigInt den);

BigInt pow_int(const BigInt& base, unsigned long exp);

// base^exp for possibly negative exp; throws std::domain_error on 0^negative.
BigRat pow_rat(const BigRat& base, long exp);

// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime(std::uint64_t n);

// Throws std::invalid_argument unless p is prime.
void require_prime(std::uint64_t p);

// p-adic valuation of a nonzero argument. Throws std::domain_error on zero
// input, std::invalid_argument on composite p. For rationals this can be
// negative.
long vp(const BigInt& x, std::uint64_t p);
long vp(const BigRat& x, std::uint64_t p);

// Valuation of lhs - rhs; nullopt when the difference vanishes (the valuation
// is +infinity, so any congruence bound passes).
std::optional<long> vp_diff(const BigInt& lhs, const BigInt& rhs, std::uint64_t p);
std::optional<long> vp_diff(const BigRat& lhs, const BigRat& rhs, std::uint64_t p);

// True iff the valuation of lhs - rhs is at least `bound` (vacuously for a
// zero difference).
bool congruent_mod_prime_power(const BigInt& lhs, const BigInt& rhs, std::uint64_t p, long bound);
bool congruent_mod_prime_power(const BigRat& lhs, const BigRat& rhs, std::uint64_t p, long bound);

// A residue class modulo p^N, stored as the representative in [0, p^N).
struct PrimePowerResidue {
  BigInt value;
  std::uint64_t p = 0;
  unsigned N = 0;

  BigInt modulus() const;

  bool operator==(const PrimePowerResidue& other) const = default;
};

PrimePowerResidue reduce_mod_prime_power(const BigInt& x, std::uint64_t p, unsigned N);

// Requires the denominator to be a p-unit; throws std::domain_error otherwise.
PrimePowerResidue reduce_mod_prime_power(const BigRat& x, std::uint64_t p, unsigned N);

// Multiplicative inverse of a modulo p^N; throws std::domain_error when p | a.
PrimePowerResidue unit_inverse(const BigInt& a, std::uint64_t p, unsigned N);

}  // namespace sporadic
