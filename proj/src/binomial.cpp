#include "sporadic/binomial.hpp"

#include <stdexcept>
#include <vector>

namespace sporadic {

namespace {

struct FactorialCache {
  std::vector<BigInt> values{BigInt(1)};  // values[i] = i!
  unsigned long limit = 100000;
};

FactorialCache& cache() {
  thread_local FactorialCache c;
  return c;
}

}  // namespace

void set_factorial_cache_limit(unsigned long limit) {
  auto& c = cache();
  c.limit = limit;
  // Drop retained entries beyond the new limit; values[0] = 1 always stays.
  if (c.values.size() > limit && c.values.size() - 1 > limit) c.values.resize(limit + 1);
}

BigInt factorial(unsigned long n) {
  auto& c = cache();
  if (n < c.values.size()) return c.values[n];
  if (n <= c.limit) {
    while (c.values.size() <= n) {
      c.values.push_back(c.values.back() * static_cast<unsigned long>(c.values.size()));
    }
    return c.values[n];
  }
  // beyond the retained range: extend from the cached prefix transiently
  BigInt acc = c.values.back();
  for (unsigned long i = c.values.size(); i <= n; ++i) acc *= i;
  return acc;
}

BigInt binom(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt binom_or_zero(std::int64_t n, std::int64_t k) {
  if (n < 0) return BigInt(0);
  return binom(static_cast<std::uint64_t>(n), k);
}

BigInt binom_gen(const BigInt& x, unsigned long k) {
  if (sgn(x) >= 0) {
    if (x.fits_ulong_p()) return binom(x.get_ui(), static_cast<std::int64_t>(k));
    // enormous nonnegative upper index: plain descending product
    BigInt num(1);
    for (unsigned long i = 0; i < k; ++i) num *= x - static_cast<unsigned long>(i);
    BigInt r;
    BigInt kf = factorial(k);
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), kf.get_mpz_t());
    return r;
  }
  // upper negation: C(x, k) = (-1)^k C(k - x - 1, k)
  BigInt top = BigInt(static_cast<unsigned long>(k)) - x - 1;
  BigInt r = binom_gen(top, k);
  return (k % 2 == 0) ? r : BigInt(-r);
}

BigRat binom_gen(const BigRat& x, unsigned long k) {
  if (x.get_den() == 1) return BigRat(binom_gen(BigInt(x.get_num()), k));
  BigRat num(1);
  for (unsigned long i = 0; i < k; ++i) num *= x - BigRat(static_cast<unsigned long>(i));
  return num / BigRat(factorial(k));
}

BigInt super_catalan(unsigned long m, unsigned long n) {
  BigInt num = factorial(2 * m) * factorial(2 * n);
  BigInt den = factorial(m) * factorial(n) * factorial(m + n);
  BigInt r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

}  // namespace sporadic
