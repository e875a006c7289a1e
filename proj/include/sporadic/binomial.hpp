#pragma once

#include <cstdint>

#include "sporadic/exact.hpp"

namespace sporadic {

// n! through a lazily grown per-thread cache. Indices above the cache bound
// are computed on the fly (extending from the cached prefix) without being
// retained.
BigInt factorial(unsigned long n);

// Cap on the largest factorial index the per-thread cache will retain.
void set_factorial_cache_limit(unsigned long limit);  // default 100000

// Combinatorial convention: zero unless 0 <= k <= n.
BigInt binom(std::uint64_t n, std::int64_t k);

// Combinatorial convention extended to a signed upper index (still zero for
// n < 0): convenient for sums whose upper index can run negative.
BigInt binom_or_zero(std::int64_t n, std::int64_t k);

// Generalized binomial x(x-1)...(x-k+1)/k!. Agrees with binom() for integer
// x >= 0 but is nonzero for negative upper index.
BigRat binom_gen(const BigRat& x, unsigned long k);
BigInt binom_gen(const BigInt& x, unsigned long k);

// (2m)! (2n)! / (m! n! (m+n)!) -- always an integer, even when m+n >= 1.
BigInt super_catalan(unsigned long m, unsigned long n);

}  // namespace sporadic
