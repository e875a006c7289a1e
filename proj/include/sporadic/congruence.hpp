#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sporadic/exact.hpp"
#include "sporadic/sequences.hpp"

namespace sporadic {

// Claimed exponent as a function of r: coeff*r + offset ("3r", "2r+3", ...).
struct ExponentRule {
  int coeff = 3;
  int offset = 0;

  long at(unsigned r) const { return static_cast<long>(coeff) * r + offset; }
  std::string display() const;
};

struct GridSpec {
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> m_values;
  std::vector<unsigned> r_values;
  ExponentRule rule;

  // Throws std::invalid_argument on empty lists, composite "primes", or
  // zero m/r entries.
  void validate() const;
};

struct CongruenceCheck {
  SequenceId sequence;
  std::uint64_t p = 0;
  unsigned m = 1;
  unsigned r = 1;
  long claimed_exponent = 0;
  std::optional<long> observed_valuation;  // empty: the difference is zero
  bool pass = false;
  // Conjectural results are reported but only fail a run under --strict.
  bool conjectural = false;
  // Below-threshold cells of the conjectured grids: reported, never counted.
  bool asserted = true;
};

// v_p(A(m p^r) - A(m p^{r-1})) compared against the claimed exponent.
CongruenceCheck check_two_term(const SequenceId& id, std::uint64_t p, unsigned m, unsigned r,
                               long claimed_exponent);

// One grid cell waiting to be checked; builders below produce these in
// canonical (sequence, p, m, r) order.
struct TwoTermJob {
  SequenceId id;
  std::uint64_t p = 0;
  unsigned m = 1;
  unsigned r = 1;
  long claimed = 0;
  bool conjectural = false;
  bool asserted = true;
};

// Runs the jobs (possibly concurrently); result i always corresponds to
// job i, so output order is deterministic for any jobs count.
std::vector<CongruenceCheck> run_two_term_jobs(const std::vector<TwoTermJob>& jobs, unsigned n_jobs);

// Cross product of the given sequences with the grid, exponent from the
// grid's rule.
std::vector<TwoTermJob> grid_jobs(const std::vector<SequenceId>& ids, const GridSpec& grid,
                                  bool conjectural = false);

// The S-family two-term congruence at exponent 3r: every A >= 2 with any
// B, C >= 0, for primes >= 5. Rejects out-of-hypothesis input.
std::vector<TwoTermJob> s_family_grid_jobs(const std::vector<unsigned>& A_values,
                                           const std::vector<unsigned>& B_values,
                                           const std::vector<unsigned>& C_values, GridSpec grid);

// All 15 cataloged sequences at their tabulated exponent k*r (primes >= 5;
// the two conjectural rows are tagged).
std::vector<TwoTermJob> table_suite_jobs(GridSpec grid);

// The conjectured p = 2, 3 strengthenings for s7/s18. Cells below the
// conjecture's m-threshold are emitted with asserted = false.
std::vector<TwoTermJob> small_prime_conjecture_jobs(Catalog id, unsigned m_max, unsigned r_max);

// The U-family congruence at exponent 3r (primes >= 5), sound for a+b >= 2.
std::vector<TwoTermJob> u_family_grid_jobs(const std::vector<UFamily>& ids, GridSpec grid);

// --- lemma-level predicates ------------------------------------------------

struct ValuationCheck {
  std::optional<long> observed;  // empty: exact equality (infinite valuation)
  long required = 0;
  bool pass = false;
  bool degenerate = false;  // comparison target vanished; nothing to assert
};

ValuationCheck make_valuation_check(std::optional<long> observed, long required);

// Jacobsthal-type congruence: with N = binom(p^r a, p^s b) and
// D = binom(p^{r-1} a, p^{s-1} b) (generalized binomials), checks
// v_p(N - D) >= r + s + min(r,s) + v_p(D). D = 0 is reported degenerate.
ValuationCheck jacobsthal_check(long a, long b, unsigned r, unsigned s, std::uint64_t p);

// Primed power sums. Full range: v_p(sum'_{k=1}^{p^r-1} k^n) >= r, needing
// n != 0 mod p-1. Half range: v_p(sum'_{k=1}^{(p^r-1)/2} k^{-n}) >= r,
// additionally needing n even and p >= 5. The primed sum omits multiples
// of p. Throws std::domain_error when a hypothesis fails.
ValuationCheck power_sum_check(long n, std::uint64_t p, unsigned r, bool half);

// With B(n,k) = binom(n,k)^A binom(n+k,k)^B binom(2k,n)^C, checks
// v_p(B(n p^r, k p^s) - B(n p^{r-1}, k p^{s-1})) >= 3r for p >= 5, A >= 2,
// p not dividing k.
ValuationCheck summand_B_check(unsigned long n, unsigned long k, unsigned A, unsigned B, unsigned C,
                               unsigned r, unsigned s, std::uint64_t p);

// binom(m p^r - 1, k)(-1)^k = binom(m p^{r-1} - 1, floor(k/p))(-1)^{floor(k/p)}
// modulo p^r, generalized binomials (m may be any integer).
ValuationCheck binomial_reduction_check(long m, unsigned long k, unsigned r, std::uint64_t p);

// With C(n,k,j) = binom(n-1,k)^A binom(n+k,k)^B binom(j,n)^C, checks
// C(n p^r, k, j) = (-1)^{(k + floor(k/p)) A} C(n p^{r-1}, floor(k/p),
// floor(j/p)) modulo p^r.
ValuationCheck summand_C_check(unsigned long n, unsigned long k, unsigned long j, unsigned A, unsigned B,
                               unsigned C, unsigned r, std::uint64_t p);

// v_p(sum'_{1 <= k <= m p^r, p !| k} B(m p^r, k)) >= 3r for p >= 5, A >= 2.
ValuationCheck g0_divisibility_check(unsigned long m, unsigned r, std::uint64_t p, unsigned A, unsigned B,
                                     unsigned C);

// With D(n,k) = (-1)^k binom(n,k)^2 S(n-k,k) [binom(2n-3k-1,n) +
// binom(2n-3k,n)] (S the super Catalan numbers), checks the two-term
// difference at indices (m p^r, k p^s) vs (m p^{r-1}, k p^{s-1}) against
// 3r for p >= 5, 3r-1 for p = 3, and 2r for p = 2. Requires p !| k.
ValuationCheck summand_D_check(unsigned long m, unsigned long k, unsigned r, unsigned s, std::uint64_t p);

// --- randomized lemma suites -------------------------------------------------

struct LemmaInstance {
  std::string lemma;                   // which predicate
  std::map<std::string, long> params;  // the sampled arguments, keyed by name
  ValuationCheck check;
};

// `count` randomized hypothesis-respecting instances of each of the seven
// predicates above, deterministic for a fixed seed. Degenerate samples are
// redrawn rather than reported.
std::vector<LemmaInstance> run_lemma_suites(unsigned count, std::uint64_t seed);

}  // namespace sporadic
