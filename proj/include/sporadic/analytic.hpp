#pragma once

#include <cstdint>
#include <vector>

#include "sporadic/congruence.hpp"
#include "sporadic/exact.hpp"

namespace sporadic {

// Truncated q-expansion; coefficients[n] is the coefficient of q^n.
struct QExpansion {
  std::vector<BigInt> coefficients;

  const BigInt& at(std::size_t n) const { return coefficients.at(n); }
  std::size_t limit() const { return coefficients.size() - 1; }
};

// q prod_{n>=1} (1-q^{2n})^4 (1-q^{4n})^4 through q^limit: the weight-4
// cusp form whose odd coefficients a(p) enter the modular supercongruence.
QExpansion eta_q_expansion(unsigned long limit);

// v_p(A((p-1)/2) - a(p)) >= 2 for the Apery numbers A and the expansion's
// a(p); p must be odd (the asserted strength needs p >= 5 -- the caller
// decides what to assert for p = 3).
ValuationCheck beukers_check(std::uint64_t p, const QExpansion& expansion);

// Gamma_p(x) mod p^N in the Morita convention: reduce x to the residue
// xbar in [0, p^N), then (-1)^xbar prod_{0<j<xbar, p !| j} j. Odd p only;
// the denominator of x must be a p-unit.
PrimePowerResidue padic_gamma(const BigRat& x, std::uint64_t p, unsigned N);

// T = sum_{k=0}^{(p-1)/2} (4k+1) binom_gen(-1/2,k)^5 as an exact rational.
BigRat van_hamme_sum(std::uint64_t p);

struct VanHammeResult {
  std::uint64_t p = 0;
  // p = 3 mod 4: v_p(T) >= 3. p = 1 mod 4: v_p(T + p/Gamma_p(3/4)^4) >= 3.
  bool gamma_branch = false;
  ValuationCheck check;
};

VanHammeResult van_hamme_check(std::uint64_t p);

}  // namespace sporadic
