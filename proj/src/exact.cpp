#include "sporadic/exact.hpp"

#include <stdexcept>

namespace sporadic {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

BigInt from_u64(std::uint64_t v) {
  // unsigned long is 64-bit on every platform we target
  return BigInt(static_cast<unsigned long>(v));
}

}  // namespace

BigRat make_rat(BigInt num, BigInt den) {
  if (sgn(den) == 0) throw std::domain_error("make_rat: zero denominator");
  BigRat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigRat pow_rat(const BigRat& base, long exp) {
  if (exp >= 0) {
    return make_rat(pow_int(BigInt(base.get_num()), static_cast<unsigned long>(exp)),
                    pow_int(BigInt(base.get_den()), static_cast<unsigned long>(exp)));
  }
  if (sgn(base) == 0) throw std::domain_error("pow_rat: zero base with negative exponent");
  return make_rat(pow_int(BigInt(base.get_den()), static_cast<unsigned long>(-exp)),
                  pow_int(BigInt(base.get_num()), static_cast<unsigned long>(-exp)));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // this witness set is a proven deterministic certificate below 3.3 * 10^24
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("expected a prime, got " + std::to_string(p));
  }
}

long vp(const BigInt& x, std::uint64_t p) {
  require_prime(p);
  if (sgn(x) == 0) throw std::domain_error("vp: valuation of zero is undefined");
  BigInt cofactor;
  BigInt pz = from_u64(p);
  return static_cast<long>(mpz_remove(cofactor.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

long vp(const BigRat& x, std::uint64_t p) {
  require_prime(p);
  if (sgn(x) == 0) throw std::domain_error("vp: valuation of zero is undefined");
  BigInt num(x.get_num()), den(x.get_den());
  BigInt cofactor;
  BigInt pz = from_u64(p);
  long vn = static_cast<long>(mpz_remove(cofactor.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(cofactor.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
  return vn - vd;
}

std::optional<long> vp_diff(const BigInt& lhs, const BigInt& rhs, std::uint64_t p) {
  BigInt d = lhs - rhs;
  if (sgn(d) == 0) return std::nullopt;
  return vp(d, p);
}

std::optional<long> vp_diff(const BigRat& lhs, const BigRat& rhs, std::uint64_t p) {
  BigRat d = lhs - rhs;
  if (sgn(d) == 0) return std::nullopt;
  return vp(d, p);
}

bool congruent_mod_prime_power(const BigInt& lhs, const BigInt& rhs, std::uint64_t p, long bound) {
  auto v = vp_diff(lhs, rhs, p);
  return !v || *v >= bound;
}

bool congruent_mod_prime_power(const BigRat& lhs, const BigRat& rhs, std::uint64_t p, long bound) {
  auto v = vp_diff(lhs, rhs, p);
  return !v || *v >= bound;
}

BigInt PrimePowerResidue::modulus() const { return pow_int(from_u64(p), N); }

PrimePowerResidue reduce_mod_prime_power(const BigInt& x, std::uint64_t p, unsigned N) {
  require_prime(p);
  if (N == 0) throw std::invalid_argument("reduce_mod_prime_power: N must be positive");
  PrimePowerResidue r{BigInt(0), p, N};
  BigInt mod = r.modulus();
  mpz_fdiv_r(r.value.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  return r;
}

PrimePowerResidue reduce_mod_prime_power(const BigRat& x, std::uint64_t p, unsigned N) {
  require_prime(p);
  if (N == 0) throw std::invalid_argument("reduce_mod_prime_power: N must be positive");
  BigInt den(x.get_den());
  if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
    throw std::domain_error("reduce_mod_prime_power: denominator is not a p-unit");
  }
  PrimePowerResidue inv = unit_inverse(den, p, N);
  BigInt prod = BigInt(x.get_num()) * inv.value;
  return reduce_mod_prime_power(prod, p, N);
}

PrimePowerResidue unit_inverse(const BigInt& a, std::uint64_t p, unsigned N) {
  require_prime(p);
  if (N == 0) throw std::invalid_argument("unit_inverse: N must be positive");
  PrimePowerResidue r{BigInt(0), p, N};
  BigInt mod = r.modulus();
  if (mpz_invert(r.value.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::domain_error("unit_inverse: argument is divisible by p");
  }
  return r;
}

}  // namespace sporadic
