#include "sporadic/congruence.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sporadic/binomial.hpp"
#include "sporadic/parallel.hpp"

namespace sporadic {

namespace {

// m * p^r as a plain index, guarded so a typo cannot ask for a sum with
// billions of terms.
unsigned long sequence_index(std::uint64_t p, unsigned r, unsigned m) {
  constexpr unsigned long kCap = 2000000;
  unsigned __int128 v = m;
  for (unsigned i = 0; i < r; ++i) {
    v *= p;
    if (v > kCap) throw std::invalid_argument("check_two_term: index m*p^r too large to evaluate");
  }
  return static_cast<unsigned long>(v);
}

BigInt big_prime_power(std::uint64_t p, unsigned r) {
  return pow_int(BigInt(static_cast<unsigned long>(p)), r);
}

unsigned long ul_prime_power(std::uint64_t p, unsigned r) {
  BigInt v = big_prime_power(p, r);
  if (!v.fits_ulong_p()) throw std::overflow_error("prime power does not fit a machine word");
  return v.get_ui();
}

// Product of f_i^{e_i} where a zero exponent means "factor absent" (so the
// factor is 1 even when the base vanishes).
BigInt pow_product(std::initializer_list<std::pair<BigInt, unsigned>> factors) {
  BigInt acc(1);
  for (const auto& [f, e] : factors) {
    if (e == 0) continue;
    if (sgn(f) == 0) return BigInt(0);
    acc *= (e == 1) ? f : pow_int(f, e);
  }
  return acc;
}

// binom(n,k)^A binom(n+k,k)^B binom(2k,n)^C
BigInt B_summand(unsigned long n, unsigned long k, unsigned A, unsigned B, unsigned C) {
  auto lk = static_cast<std::int64_t>(k);
  return pow_product({{binom(n, lk), A},
                      {binom(n + k, lk), B},
                      {binom(2 * k, static_cast<std::int64_t>(n)), C}});
}

// binom(n-1,k)^A binom(n+k,k)^B binom(j,n)^C with a generalized first factor
// (n = 0 makes its upper index -1).
BigInt C_summand(unsigned long n, unsigned long k, unsigned long j, unsigned A, unsigned B, unsigned C) {
  BigInt top = BigInt(n) - 1;
  return pow_product({{binom_gen(top, k), A},
                      {binom(n + k, static_cast<std::int64_t>(k)), B},
                      {binom(j, static_cast<std::int64_t>(n)), C}});
}

// (-1)^k binom(n,k)^2 S(n-k,k) [binom(2n-3k-1,n) + binom(2n-3k,n)]
BigInt D_summand(unsigned long n, unsigned long k) {
  BigInt b = binom(n, static_cast<std::int64_t>(k));
  if (sgn(b) == 0) return BigInt(0);
  auto ln = static_cast<std::int64_t>(n);
  auto lk = static_cast<std::int64_t>(k);
  BigInt bracket = binom_or_zero(2 * ln - 3 * lk - 1, ln) + binom_or_zero(2 * ln - 3 * lk, ln);
  if (sgn(bracket) == 0) return BigInt(0);
  BigInt v = b * b * super_catalan(n - k, k) * bracket;
  return (k % 2 == 1) ? BigInt(-v) : v;
}

void require_positive(unsigned v, const char* what) {
  if (v == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

std::string ExponentRule::display() const {
  std::ostringstream os;
  if (coeff != 0) {
    if (coeff != 1) os << coeff;
    os << "r";
    if (offset > 0) os << "+" << offset;
    if (offset < 0) os << offset;
  } else {
    os << offset;
  }
  return os.str();
}

void GridSpec::validate() const {
  if (primes.empty()) throw std::invalid_argument("grid: empty prime list");
  if (m_values.empty()) throw std::invalid_argument("grid: empty m list");
  if (r_values.empty()) throw std::invalid_argument("grid: empty r list");
  for (auto p : primes) require_prime(p);
  for (auto m : m_values) require_positive(m, "grid m");
  for (auto r : r_values) require_positive(r, "grid r");
}

CongruenceCheck check_two_term(const SequenceId& id, std::uint64_t p, unsigned m, unsigned r,
                               long claimed_exponent) {
  require_prime(p);
  require_positive(m, "m");
  require_positive(r, "r");
  CongruenceCheck result;
  result.sequence = id;
  result.p = p;
  result.m = m;
  result.r = r;
  result.claimed_exponent = claimed_exponent;
  BigInt hi = eval_sequence(id, sequence_index(p, r, m));
  BigInt lo = eval_sequence(id, sequence_index(p, r - 1, m));
  result.observed_valuation = vp_diff(hi, lo, p);
  result.pass = !result.observed_valuation || *result.observed_valuation >= claimed_exponent;
  return result;
}

std::vector<CongruenceCheck> run_two_term_jobs(const std::vector<TwoTermJob>& jobs, unsigned n_jobs) {
  std::vector<CongruenceCheck> results(jobs.size());
  parallel_for(jobs.size(), n_jobs, [&](std::size_t i) {
    const TwoTermJob& job = jobs[i];
    CongruenceCheck check = check_two_term(job.id, job.p, job.m, job.r, job.claimed);
    check.conjectural = job.conjectural;
    check.asserted = job.asserted;
    results[i] = check;
  });
  return results;
}

namespace {

GridSpec sorted_grid(GridSpec grid) {
  auto uniq = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(grid.primes);
  uniq(grid.m_values);
  uniq(grid.r_values);
  grid.validate();
  return grid;
}

}  // namespace

std::vector<TwoTermJob> grid_jobs(const std::vector<SequenceId>& ids, const GridSpec& grid,
                                  bool conjectural) {
  GridSpec g = sorted_grid(grid);
  std::vector<SequenceId> sorted_ids = ids;
  std::sort(sorted_ids.begin(), sorted_ids.end(), sequence_less);
  sorted_ids.erase(std::unique(sorted_ids.begin(), sorted_ids.end()), sorted_ids.end());
  std::vector<TwoTermJob> jobs;
  jobs.reserve(sorted_ids.size() * g.primes.size() * g.m_values.size() * g.r_values.size());
  for (const auto& id : sorted_ids) {
    for (auto p : g.primes) {
      for (auto m : g.m_values) {
        for (auto r : g.r_values) {
          jobs.push_back({id, p, m, r, g.rule.at(r), conjectural, true});
        }
      }
    }
  }
  return jobs;
}

std::vector<TwoTermJob> s_family_grid_jobs(const std::vector<unsigned>& A_values,
                                           const std::vector<unsigned>& B_values,
                                           const std::vector<unsigned>& C_values, GridSpec grid) {
  for (auto A : A_values) {
    if (A < 2) throw std::invalid_argument("S-family congruence requires A >= 2");
  }
  for (auto p : grid.primes) {
    if (p < 5) throw std::invalid_argument("S-family congruence requires primes >= 5");
  }
  grid.rule = {3, 0};
  std::vector<SequenceId> ids;
  auto A_sorted = A_values, B_sorted = B_values, C_sorted = C_values;
  std::sort(A_sorted.begin(), A_sorted.end());
  std::sort(B_sorted.begin(), B_sorted.end());
  std::sort(C_sorted.begin(), C_sorted.end());
  for (auto A : A_sorted) {
    for (auto B : B_sorted) {
      for (auto C : C_sorted) ids.push_back(SFamily{A, B, C});
    }
  }
  return grid_jobs(ids, grid);
}

std::vector<TwoTermJob> table_suite_jobs(GridSpec grid) {
  for (auto p : grid.primes) {
    if (p < 5) throw std::invalid_argument("table suite requires primes >= 5");
  }
  std::vector<TwoTermJob> jobs;
  for (const auto& entry : catalog()) {
    GridSpec g = grid;
    g.rule = {entry.exponent_k, 0};
    auto block = grid_jobs({entry.id}, g, entry.conjectural);
    jobs.insert(jobs.end(), block.begin(), block.end());
  }
  return jobs;
}

std::vector<TwoTermJob> small_prime_conjecture_jobs(Catalog id, unsigned m_max, unsigned r_max) {
  if (id != Catalog::S7 && id != Catalog::S18) {
    throw std::invalid_argument("small-prime conjectures cover only s7 and s18");
  }
  require_positive(m_max, "m_max");
  require_positive(r_max, "r_max");
  std::vector<TwoTermJob> jobs;
  for (std::uint64_t p : {2, 3}) {
    for (unsigned m = 1; m <= m_max; ++m) {
      for (unsigned r = 1; r <= r_max; ++r) {
        TwoTermJob job;
        job.id = id;
        job.p = p;
        job.m = m;
        job.r = r;
        job.conjectural = true;
        if (id == Catalog::S7) {
          job.claimed = (p == 2) ? 3l * r + 2 : 3l * r;
          job.asserted = (p == 2) ? m >= 4 : true;
        } else {
          job.claimed = (p == 2) ? 2l * r + 3 : (r == 1 ? 3 : 3l * r - 1);
          job.asserted = (p == 2) ? m >= 2 : m >= 3;
        }
        jobs.push_back(job);
      }
    }
  }
  return jobs;
}

std::vector<TwoTermJob> u_family_grid_jobs(const std::vector<UFamily>& ids, GridSpec grid) {
  for (auto p : grid.primes) {
    if (p < 5) throw std::invalid_argument("U-family congruence requires primes >= 5");
  }
  grid.rule = {3, 0};
  std::vector<SequenceId> seq_ids(ids.begin(), ids.end());
  return grid_jobs(seq_ids, grid);
}

// --- lemma predicates --------------------------------------------------------

ValuationCheck make_valuation_check(std::optional<long> observed, long required) {
  ValuationCheck check;
  check.observed = observed;
  check.required = required;
  check.pass = !observed || *observed >= required;
  return check;
}

ValuationCheck jacobsthal_check(long a, long b, unsigned r, unsigned s, std::uint64_t p) {
  require_prime(p);
  if (p < 5) throw std::invalid_argument("jacobsthal_check requires p >= 5");
  require_positive(r, "r");
  require_positive(s, "s");

  auto binom_at = [&](unsigned rr, unsigned ss) -> BigInt {
    BigInt top = big_prime_power(p, rr) * a;
    BigInt low = big_prime_power(p, ss) * b;
    if (sgn(low) < 0) return BigInt(0);  // negative lower index
    if (!low.fits_ulong_p()) throw std::overflow_error("jacobsthal_check: lower index too large");
    return binom_gen(top, low.get_ui());
  };

  BigInt N = binom_at(r, s);
  BigInt D = binom_at(r - 1, s - 1);
  if (sgn(D) == 0) {
    ValuationCheck check;
    check.degenerate = true;
    check.pass = true;  // nothing to compare against
    return check;
  }
  long required = static_cast<long>(r) + s + std::min(r, s) + vp(D, p);
  return make_valuation_check(vp_diff(N, D, p), required);
}

ValuationCheck power_sum_check(long n, std::uint64_t p, unsigned r, bool half) {
  require_prime(p);
  require_positive(r, "r");
  long modulus = static_cast<long>(p) - 1;
  if (((n % modulus) + modulus) % modulus == 0) {
    throw std::domain_error("power_sum_check: hypothesis violated, n = 0 mod p-1");
  }
  if (half) {
    if (p < 5) throw std::domain_error("power_sum_check: half range requires p >= 5");
    if (((n % 2) + 2) % 2 != 0) throw std::domain_error("power_sum_check: half range requires n even");
  }

  BigInt pr = big_prime_power(p, r);
  if (!pr.fits_ulong_p() || pr.get_ui() > 10000000) {
    throw std::invalid_argument("power_sum_check: p^r too large");
  }
  unsigned long limit = half ? (pr.get_ui() - 1) / 2 : pr.get_ui() - 1;
  long exponent = half ? -n : n;
  BigRat sum(0);
  for (unsigned long k = 1; k <= limit; ++k) {
    if (k % p == 0) continue;
    sum += pow_rat(BigRat(k), exponent);
  }
  std::optional<long> observed;
  if (sgn(sum) != 0) observed = vp(sum, p);
  return make_valuation_check(observed, static_cast<long>(r));
}

ValuationCheck summand_B_check(unsigned long n, unsigned long k, unsigned A, unsigned B, unsigned C,
                               unsigned r, unsigned s, std::uint64_t p) {
  require_prime(p);
  if (p < 5) throw std::invalid_argument("summand_B_check requires p >= 5");
  if (A < 2) throw std::invalid_argument("summand_B_check requires A >= 2");
  if (k % p == 0) throw std::invalid_argument("summand_B_check requires p !| k");
  require_positive(r, "r");
  require_positive(s, "s");
  unsigned long pr = ul_prime_power(p, r);
  unsigned long ps = ul_prime_power(p, s);
  unsigned long pr1 = pr / p, ps1 = ps / p;
  BigInt hi = B_summand(n * pr, k * ps, A, B, C);
  BigInt lo = B_summand(n * pr1, k * ps1, A, B, C);
  return make_valuation_check(vp_diff(hi, lo, p), 3l * r);
}

ValuationCheck binomial_reduction_check(long m, unsigned long k, unsigned r, std::uint64_t p) {
  require_prime(p);
  require_positive(r, "r");
  BigInt hi_top = big_prime_power(p, r) * m - 1;
  BigInt lo_top = big_prime_power(p, r - 1) * m - 1;
  BigInt lhs = binom_gen(hi_top, k);
  if (k % 2 == 1) lhs = -lhs;
  BigInt rhs = binom_gen(lo_top, k / p);
  if ((k / p) % 2 == 1) rhs = -rhs;
  return make_valuation_check(vp_diff(lhs, rhs, p), static_cast<long>(r));
}

ValuationCheck summand_C_check(unsigned long n, unsigned long k, unsigned long j, unsigned A, unsigned B,
                               unsigned C, unsigned r, std::uint64_t p) {
  require_prime(p);
  require_positive(r, "r");
  unsigned long pr = ul_prime_power(p, r);
  BigInt lhs = C_summand(n * pr, k, j, A, B, C);
  BigInt rhs = C_summand(n * (pr / p), k / p, j / p, A, B, C);
  if (((k + k / p) * static_cast<unsigned long>(A)) % 2 == 1) rhs = -rhs;
  return make_valuation_check(vp_diff(lhs, rhs, p), static_cast<long>(r));
}

ValuationCheck g0_divisibility_check(unsigned long m, unsigned r, std::uint64_t p, unsigned A, unsigned B,
                                     unsigned C) {
  require_prime(p);
  if (p < 5) throw std::invalid_argument("g0_divisibility_check requires p >= 5");
  if (A < 2) throw std::invalid_argument("g0_divisibility_check requires A >= 2");
  require_positive(static_cast<unsigned>(m), "m");
  require_positive(r, "r");
  unsigned long n = m * ul_prime_power(p, r);
  BigInt sum(0);
  for (unsigned long k = 1; k <= n; ++k) {
    if (k % p == 0) continue;
    sum += B_summand(n, k, A, B, C);
  }
  std::optional<long> observed;
  if (sgn(sum) != 0) observed = vp(sum, p);
  return make_valuation_check(observed, 3l * r);
}

ValuationCheck summand_D_check(unsigned long m, unsigned long k, unsigned r, unsigned s, std::uint64_t p) {
  require_prime(p);
  if (k % p == 0) throw std::invalid_argument("summand_D_check requires p !| k");
  require_positive(static_cast<unsigned>(m), "m");
  require_positive(static_cast<unsigned>(k), "k");
  require_positive(r, "r");
  require_positive(s, "s");
  unsigned long pr = ul_prime_power(p, r);
  unsigned long ps = ul_prime_power(p, s);
  BigInt hi = D_summand(m * pr, k * ps);
  BigInt lo = D_summand(m * (pr / p), k * (ps / p));
  long required;
  if (p >= 5) {
    required = 3l * r;
  } else if (p == 3) {
    required = 3l * r - 1;
  } else {
    required = 2l * r;
  }
  return make_valuation_check(vp_diff(hi, lo, p), required);
}

// --- randomized suites -------------------------------------------------------

namespace {

using Rng = std::mt19937_64;

long pick(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

LemmaInstance jacobsthal_instance(Rng& rng) {
  const std::uint64_t primes[] = {5, 7, 11, 13};
  for (;;) {
    std::uint64_t p = primes[pick(rng, 0, 3)];
    long a = pick(rng, -8, 8);
    long b = pick(rng, 1, 6);
    unsigned r = static_cast<unsigned>(pick(rng, 1, 2));
    unsigned s = static_cast<unsigned>(pick(rng, 1, 2));
    if (a == 0) continue;
    auto check = jacobsthal_check(a, b, r, s, p);
    if (check.degenerate) continue;
    return {"jacobsthal",
            {{"a", a}, {"b", b}, {"r", r}, {"s", s}, {"p", static_cast<long>(p)}},
            check};
  }
}

LemmaInstance power_sum_instance(Rng& rng, bool half) {
  const std::uint64_t full_primes[] = {3, 5, 7, 11, 13};
  const std::uint64_t half_primes[] = {5, 7, 11, 13};
  for (;;) {
    std::uint64_t p = half ? half_primes[pick(rng, 0, 3)] : full_primes[pick(rng, 0, 4)];
    unsigned r = static_cast<unsigned>(pick(rng, 1, p <= 7 ? 3 : 2));
    long n = pick(rng, -10, 14);
    long modulus = static_cast<long>(p) - 1;
    if (((n % modulus) + modulus) % modulus == 0) continue;
    if (half && ((n % 2) + 2) % 2 != 0) continue;
    auto check = power_sum_check(n, p, r, half);
    return {half ? "power-sum-half" : "power-sum-full",
            {{"n", n}, {"p", static_cast<long>(p)}, {"r", r}, {"half", half ? 1 : 0}},
            check};
  }
}

LemmaInstance summand_B_instance(Rng& rng) {
  const std::uint64_t primes[] = {5, 7, 11, 13};
  for (;;) {
    std::uint64_t p = primes[pick(rng, 0, 3)];
    unsigned A = static_cast<unsigned>(pick(rng, 2, 4));
    unsigned B = static_cast<unsigned>(pick(rng, 0, 3));
    unsigned C = static_cast<unsigned>(pick(rng, 0, 3));
    unsigned long n = static_cast<unsigned long>(pick(rng, 1, 4));
    unsigned long k = static_cast<unsigned long>(pick(rng, 1, 6));
    unsigned r = static_cast<unsigned>(pick(rng, 1, 2));
    unsigned s = static_cast<unsigned>(pick(rng, 1, r));  // bias toward informative cells
    if (k % p == 0) continue;
    auto check = summand_B_check(n, k, A, B, C, r, s, p);
    return {"summand-B",
            {{"n", static_cast<long>(n)},
             {"k", static_cast<long>(k)},
             {"A", A},
             {"B", B},
             {"C", C},
             {"r", r},
             {"s", s},
             {"p", static_cast<long>(p)}},
            check};
  }
}

LemmaInstance binomial_reduction_instance(Rng& rng) {
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  std::uint64_t p = primes[pick(rng, 0, 5)];
  long m = pick(rng, -5, 6);
  unsigned long k = static_cast<unsigned long>(pick(rng, 0, 50));
  unsigned r = static_cast<unsigned>(pick(rng, 1, 3));
  auto check = binomial_reduction_check(m, k, r, p);
  return {"binomial-reduction",
          {{"m", m}, {"k", static_cast<long>(k)}, {"r", r}, {"p", static_cast<long>(p)}},
          check};
}

LemmaInstance summand_C_instance(Rng& rng) {
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  std::uint64_t p = primes[pick(rng, 0, 5)];
  unsigned long n = static_cast<unsigned long>(pick(rng, 0, 12));
  unsigned long k = static_cast<unsigned long>(pick(rng, 0, 40));
  unsigned long j = static_cast<unsigned long>(pick(rng, 0, 40));
  unsigned A = static_cast<unsigned>(pick(rng, 0, 3));
  unsigned B = static_cast<unsigned>(pick(rng, 0, 3));
  unsigned C = static_cast<unsigned>(pick(rng, 0, 3));
  unsigned r = static_cast<unsigned>(pick(rng, 1, 2));
  auto check = summand_C_check(n, k, j, A, B, C, r, p);
  return {"summand-C",
          {{"n", static_cast<long>(n)},
           {"k", static_cast<long>(k)},
           {"j", static_cast<long>(j)},
           {"A", A},
           {"B", B},
           {"C", C},
           {"r", r},
           {"p", static_cast<long>(p)}},
          check};
}

LemmaInstance g0_instance(Rng& rng) {
  const std::uint64_t primes[] = {5, 7, 11, 13};
  std::uint64_t p = primes[pick(rng, 0, 3)];
  unsigned A = static_cast<unsigned>(pick(rng, 2, 3));
  unsigned B = static_cast<unsigned>(pick(rng, 0, 2));
  unsigned C = static_cast<unsigned>(pick(rng, 0, 2));
  unsigned long m = static_cast<unsigned long>(pick(rng, 1, 3));
  unsigned r = static_cast<unsigned>(pick(rng, 1, p <= 7 ? 2 : 1));
  auto check = g0_divisibility_check(m, r, p, A, B, C);
  return {"g0-divisibility",
          {{"m", static_cast<long>(m)},
           {"r", r},
           {"p", static_cast<long>(p)},
           {"A", A},
           {"B", B},
           {"C", C}},
          check};
}

LemmaInstance summand_D_instance(Rng& rng, unsigned i) {
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  // stratified so the p = 2 and p = 3 exponent branches always get coverage
  std::uint64_t p = primes[i % 6];
  for (;;) {
    unsigned long m = static_cast<unsigned long>(pick(rng, 1, 4));
    unsigned long k = static_cast<unsigned long>(pick(rng, 1, 5));
    unsigned r = static_cast<unsigned>(pick(rng, 1, 2));
    unsigned s = static_cast<unsigned>(pick(rng, 1, 2));
    if (k % p == 0) continue;
    auto check = summand_D_check(m, k, r, s, p);
    return {"summand-D",
            {{"m", static_cast<long>(m)},
             {"k", static_cast<long>(k)},
             {"r", r},
             {"s", s},
             {"p", static_cast<long>(p)}},
            check};
  }
}

}  // namespace

std::vector<LemmaInstance> run_lemma_suites(unsigned count, std::uint64_t seed) {
  std::vector<LemmaInstance> out;
  out.reserve(8 * count);
  Rng rng(seed);
  for (unsigned i = 0; i < count; ++i) out.push_back(jacobsthal_instance(rng));
  for (unsigned i = 0; i < count; ++i) out.push_back(power_sum_instance(rng, false));
  for (unsigned i = 0; i < count; ++i) out.push_back(power_sum_instance(rng, true));
  for (unsigned i = 0; i < count; ++i) out.push_back(summand_B_instance(rng));
  for (unsigned i = 0; i < count; ++i) out.push_back(binomial_reduction_instance(rng));
  for (unsigned i = 0; i < count; ++i) out.push_back(summand_C_instance(rng));
  for (unsigned i = 0; i < count; ++i) out.push_back(g0_instance(rng));
  for (unsigned i = 0; i < count; ++i) out.push_back(summand_D_instance(rng, i));
  return out;
}

}  // namespace sporadic
