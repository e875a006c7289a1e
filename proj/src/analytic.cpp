#include "sporadic/analytic.hpp"

#include <stdexcept>

#include "sporadic/binomial.hpp"
#include "sporadic/sequences.hpp"

namespace sporadic {

namespace {

// In-place multiply of the dense series by (1 - x^step)^4, truncated at
// `limit`. Descending index order lets the update read only old values.
void multiply_quartic_factor(std::vector<BigInt>& coeff, unsigned long step, unsigned long limit) {
  for (unsigned long i = limit + 1; i-- > step;) {
    // (1 - x)^4 = 1 - 4x + 6x^2 - 4x^3 + x^4 applied at stride `step`
    coeff[i] -= 4 * coeff[i - step];
    if (i >= 2 * step) coeff[i] += 6 * coeff[i - 2 * step];
    if (i >= 3 * step) coeff[i] -= 4 * coeff[i - 3 * step];
    if (i >= 4 * step) coeff[i] += coeff[i - 4 * step];
  }
}

}  // namespace

QExpansion eta_q_expansion(unsigned long limit) {
  if (limit < 1) throw std::invalid_argument("eta_q_expansion: limit must be >= 1");
  // build prod (1-q^{2n})^4 (1-q^{4n})^4 to degree limit-1, then shift by q
  unsigned long inner = limit - 1;
  std::vector<BigInt> prod(inner + 1, BigInt(0));
  prod[0] = 1;
  for (unsigned long n = 1; 2 * n <= inner; ++n) multiply_quartic_factor(prod, 2 * n, inner);
  for (unsigned long n = 1; 4 * n <= inner; ++n) multiply_quartic_factor(prod, 4 * n, inner);
  QExpansion q;
  q.coefficients.assign(limit + 1, BigInt(0));
  for (unsigned long i = 0; i <= inner; ++i) q.coefficients[i + 1] = prod[i];
  return q;
}

ValuationCheck beukers_check(std::uint64_t p, const QExpansion& expansion) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("beukers_check: p must be odd");
  if (expansion.limit() < p) throw std::invalid_argument("beukers_check: expansion too short");
  BigInt apery = eval_catalog(Catalog::Apery, (p - 1) / 2);
  return make_valuation_check(vp_diff(apery, expansion.at(p), p), 2);
}

PrimePowerResidue padic_gamma(const BigRat& x, std::uint64_t p, unsigned N) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("padic_gamma: p = 2 is out of scope");
  if (N == 0) throw std::invalid_argument("padic_gamma: N must be positive");
  PrimePowerResidue xbar = reduce_mod_prime_power(x, p, N);  // rejects p | denominator
  if (!xbar.value.fits_ulong_p()) throw std::overflow_error("padic_gamma: p^N too large");
  unsigned long bound = xbar.value.get_ui();
  BigInt mod = xbar.modulus();
  BigInt acc(1);
  for (unsigned long j = 1; j < bound; ++j) {
    if (j % p == 0) continue;
    acc *= j;
    acc %= mod;
  }
  if (bound % 2 == 1) acc = -acc;
  return reduce_mod_prime_power(acc, p, N);
}

BigRat van_hamme_sum(std::uint64_t p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("van_hamme_sum: p must be odd");
  BigRat half(-1, 2);
  BigRat total(0);
  for (unsigned long k = 0; k <= (p - 1) / 2; ++k) {
    BigRat term = binom_gen(half, k);
    total += BigRat(4 * k + 1) * pow_rat(term, 5);
  }
  return total;
}

VanHammeResult van_hamme_check(std::uint64_t p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("van_hamme_check: p must be odd");
  VanHammeResult result;
  result.p = p;
  BigRat T = van_hamme_sum(p);
  if (p % 4 == 3) {
    result.gamma_branch = false;
    std::optional<long> observed;
    if (sgn(T) != 0) observed = vp(T, p);
    result.check = make_valuation_check(observed, 3);
  } else {
    result.gamma_branch = true;
    PrimePowerResidue gamma = padic_gamma(make_rat(3, 4), p, 3);
    PrimePowerResidue fourth = reduce_mod_prime_power(pow_int(gamma.value, 4), p, 3);
    BigInt target = BigInt(static_cast<unsigned long>(p)) * unit_inverse(fourth.value, p, 3).value;
    target = -target;
    // T = -p / Gamma_p(3/4)^4 mod p^3, as a valuation bound on the difference
    result.check = make_valuation_check(vp_diff(T, BigRat(reduce_mod_prime_power(target, p, 3).value), p), 3);
  }
  return result;
}

}  // namespace sporadic
