#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <tuple>

#include "sporadic/congruence.hpp"

using namespace sporadic;

TEST_CASE("two-term check on the Apery numbers") {
  auto check = check_two_term(SequenceId(Catalog::Apery), 5, 1, 1, 3);
  CHECK(check.pass);
  CHECK(check.observed_valuation.value() == 3);  // v_5(819005 - 5) = v_5(819000)
  CHECK_FALSE(check_two_term(SequenceId(Catalog::Apery), 5, 1, 1, 4).pass);

  auto deeper = check_two_term(SequenceId(Catalog::Apery), 5, 1, 2, 6);
  CHECK(deeper.pass);  // A(25) = A(5) mod 5^6
}

TEST_CASE("two-term check validates its arguments") {
  CHECK_THROWS_AS(check_two_term(SequenceId(Catalog::Apery), 6, 1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_two_term(SequenceId(Catalog::Apery), 5, 0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_two_term(SequenceId(Catalog::Apery), 5, 1, 0, 3), std::invalid_argument);
  // m p^r above the evaluation cap is rejected, not silently truncated.
  CHECK_THROWS_AS(check_two_term(SequenceId(Catalog::Apery), 5, 1000000, 2, 3),
                  std::invalid_argument);
}

TEST_CASE("two-term checks for the conjectured small-prime congruences") {
  // s7 at p = 2: claimed exponent 3r + 2 once m >= 4; v_2(s7(8) - s7(4)) = 8.
  auto s7_p2 = check_two_term(SequenceId(Catalog::S7), 2, 4, 1, 5);
  CHECK(s7_p2.pass);
  CHECK(s7_p2.observed_valuation.value() == 8);
  // s7 at p = 3: claimed exponent 3r; m = 1, r = 2 needs v_3 >= 6.
  CHECK(check_two_term(SequenceId(Catalog::S7), 3, 1, 2, 6).pass);
  // s18 at p = 3, r = 1: the strengthened claim is exponent 3.
  CHECK(check_two_term(SequenceId(Catalog::S18), 3, 3, 1, 3).pass);
  // s18 at p = 2: claimed exponent 2r + 3 once m >= 2; v_2(s18(4) - s18(2)) = 6.
  auto s18_p2 = check_two_term(SequenceId(Catalog::S18), 2, 2, 1, 5);
  CHECK(s18_p2.pass);
  CHECK(s18_p2.observed_valuation.value() == 6);
}

TEST_CASE("grid validation") {
  GridSpec grid;
  grid.primes = {5, 7};
  grid.m_values = {1, 2};
  grid.r_values = {1};
  CHECK_NOTHROW(grid.validate());
  GridSpec bad = grid;
  bad.primes = {6};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = grid;
  bad.m_values = {};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = grid;
  bad.r_values = {0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("grid job builders emit canonical order and respect hypotheses") {
  GridSpec grid;
  grid.primes = {7, 5, 11};  // deliberately unsorted
  grid.m_values = {2, 1};
  grid.r_values = {1, 2};
  grid.rule = {3, 0};

  auto jobs = s_family_grid_jobs({2, 3}, {0, 1, 2}, {0, 1, 2}, grid);
  CHECK(jobs.size() == 2 * 3 * 3 * 3 * 2 * 2);  // 216 cells
  for (std::size_t i = 1; i < jobs.size(); ++i) {
    const auto& a = jobs[i - 1];
    const auto& b = jobs[i];
    bool ordered = sequence_less(a.id, b.id) ||
                   (!sequence_less(b.id, a.id) &&
                    std::tuple(a.p, a.m, a.r) < std::tuple(b.p, b.m, b.r));
    CHECK(ordered);
  }
  for (const auto& job : jobs) CHECK(job.claimed == 3 * job.r);

  GridSpec small = grid;
  small.primes = {3};
  CHECK_THROWS_AS(s_family_grid_jobs({2}, {0}, {0}, small), std::invalid_argument);
  CHECK_THROWS_AS(s_family_grid_jobs({1}, {0}, {0}, grid), std::invalid_argument);
}

TEST_CASE("table suite covers the whole catalog and tags conjectural rows") {
  GridSpec grid;
  grid.primes = {5};
  grid.m_values = {1};
  grid.r_values = {1};
  grid.rule = {3, 0};
  auto jobs = table_suite_jobs(grid);
  CHECK(jobs.size() == 15);
  std::set<std::string> conjectural;
  for (const auto& job : jobs) {
    const auto& entry = catalog_entry(std::get<Catalog>(job.id));
    CHECK(job.claimed == entry.exponent_k);
    if (job.conjectural) conjectural.insert(entry.name);
  }
  CHECK(conjectural == std::set<std::string>{"zagier-b", "zagier-f"});

  grid.primes = {3};
  CHECK_THROWS_AS(table_suite_jobs(grid), std::invalid_argument);
}

TEST_CASE("small-prime conjecture grids tag below-threshold cells") {
  auto jobs = small_prime_conjecture_jobs(Catalog::S7, 5, 2);
  CHECK(jobs.size() == 2 * 5 * 2);  // p in {2,3} x m in 1..5 x r in 1..2
  for (const auto& job : jobs) {
    CHECK(job.conjectural);
    if (job.p == 2) {
      CHECK(job.claimed == 3 * job.r + 2);
      CHECK(job.asserted == (job.m >= 4));
    } else {
      CHECK(job.claimed == 3 * job.r);
      CHECK(job.asserted);
    }
  }

  auto s18_jobs = small_prime_conjecture_jobs(Catalog::S18, 4, 2);
  for (const auto& job : s18_jobs) {
    if (job.p == 2) {
      CHECK(job.claimed == 2 * job.r + 3);
      CHECK(job.asserted == (job.m >= 2));
    } else {
      CHECK(job.claimed == (job.r == 1 ? 3 : 3 * job.r - 1));
      CHECK(job.asserted == (job.m >= 3));
    }
  }

  CHECK_THROWS_AS(small_prime_conjecture_jobs(Catalog::Apery, 2, 1), std::invalid_argument);
}

TEST_CASE("job runner is deterministic for any worker count") {
  GridSpec grid;
  grid.primes = {5, 7};
  grid.m_values = {1, 2};
  grid.r_values = {1};
  grid.rule = {2, 0};
  auto jobs = grid_jobs({SequenceId(Catalog::S18), SequenceId(Catalog::ZagierC)}, grid);
  auto serial = run_two_term_jobs(jobs, 1);
  auto parallel = run_two_term_jobs(jobs, 8);
  REQUIRE(serial.size() == jobs.size());
  REQUIRE(parallel.size() == jobs.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].sequence == jobs[i].id);
    CHECK(parallel[i].sequence == jobs[i].id);
    CHECK(serial[i].p == parallel[i].p);
    CHECK(serial[i].m == parallel[i].m);
    CHECK(serial[i].r == parallel[i].r);
    CHECK(serial[i].observed_valuation == parallel[i].observed_valuation);
    CHECK(serial[i].pass == parallel[i].pass);
    CHECK(serial[i].pass);
  }
}

TEST_CASE("jacobsthal-type congruence") {
  auto check = jacobsthal_check(2, 1, 1, 1, 5);
  CHECK(check.pass);
  CHECK(check.observed.value() == 3);  // binom(10,5) - binom(2,1) = 250
  CHECK(check.required == 3);
  CHECK_FALSE(check.degenerate);

  auto negative = jacobsthal_check(-1, 1, 1, 1, 5);
  CHECK(negative.pass);
  CHECK(negative.observed.value() == 3);  // binom(-5,5) - binom(-1,1) = -125
  CHECK(negative.required == 3);

  auto degenerate = jacobsthal_check(1, 2, 1, 1, 5);  // binom(1,2) = 0
  CHECK(degenerate.degenerate);
  CHECK(degenerate.pass);

  // r = 2, s = 1: required 2 + 1 + 1 + v_7(binom(21,2)) = 5, attained exactly.
  auto deeper = jacobsthal_check(3, 2, 2, 1, 7);
  CHECK(deeper.required == 5);
  CHECK(deeper.observed.value() == 5);
  CHECK(deeper.pass);

  CHECK_THROWS_AS(jacobsthal_check(2, 1, 1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(jacobsthal_check(2, 1, 0, 1, 5), std::invalid_argument);
}

TEST_CASE("primed power sums") {
  auto full = power_sum_check(2, 5, 1, false);
  CHECK(full.pass);
  CHECK(full.observed.value() == 1);  // 1 + 4 + 9 + 16 = 30

  auto half = power_sum_check(2, 5, 1, true);
  CHECK(half.pass);
  CHECK(half.observed.value() == 1);  // 1 + 1/4 = 5/4

  auto negative_exponent = power_sum_check(-3, 7, 1, false);
  CHECK(negative_exponent.pass);
  CHECK(negative_exponent.observed.value() == 2);  // sum of 1/k^3, k = 1..6

  CHECK_THROWS_AS(power_sum_check(4, 5, 1, false), std::domain_error);   // 4 = 0 mod p-1
  CHECK_THROWS_AS(power_sum_check(2, 2, 1, false), std::domain_error);   // p = 2 unsatisfiable
  CHECK_THROWS_AS(power_sum_check(3, 5, 1, true), std::domain_error);    // half needs n even
  CHECK_THROWS_AS(power_sum_check(2, 3, 1, true), std::domain_error);    // half needs p >= 5
}

TEST_CASE("B-summand two-term difference") {
  auto check = summand_B_check(1, 1, 2, 1, 1, 1, 1, 5);
  CHECK(check.pass);
  CHECK(check.observed.value() == 3);  // 252^2 - 4 = 63500 = 2^2 5^3 127
  CHECK(check.required == 3);

  auto cubes = summand_B_check(2, 1, 3, 0, 1, 1, 1, 7);
  CHECK(cubes.pass);
  CHECK(cubes.observed.value() == 3);  // 3432^3 - 8

  auto mixed_levels = summand_B_check(1, 2, 2, 2, 0, 2, 1, 5);  // r = 2, s = 1
  CHECK(mixed_levels.required == 6);
  CHECK(mixed_levels.observed.value() == 7);
  CHECK(mixed_levels.pass);

  CHECK_THROWS_AS(summand_B_check(1, 1, 1, 1, 1, 1, 1, 5), std::invalid_argument);  // A < 2
  CHECK_THROWS_AS(summand_B_check(1, 5, 2, 1, 1, 1, 1, 5), std::invalid_argument);  // p | k
  CHECK_THROWS_AS(summand_B_check(1, 1, 2, 1, 1, 1, 1, 3), std::invalid_argument);  // p < 5
}

TEST_CASE("binomial reduction modulo p^r") {
  auto check = binomial_reduction_check(1, 3, 1, 5);
  CHECK(check.pass);  // -binom(4,3) = -4 = 1 = binom(0,0) mod 5

  auto second = binomial_reduction_check(2, 7, 1, 5);
  CHECK(second.pass);  // -binom(9,7) = -36 = -1 = -binom(1,1) mod 5

  auto negative_m = binomial_reduction_check(-3, 10, 2, 3);  // generalized binomials
  CHECK(negative_m.pass);
  CHECK(negative_m.observed.value() == 3);

  auto k_zero = binomial_reduction_check(4, 0, 3, 2);  // both sides equal 1
  CHECK(k_zero.pass);
  CHECK_FALSE(k_zero.observed.has_value());

  CHECK_THROWS_AS(binomial_reduction_check(1, 3, 0, 5), std::invalid_argument);
}

TEST_CASE("C-summand congruence with sign") {
  auto check = summand_C_check(1, 3, 7, 1, 0, 0, 1, 5);
  CHECK(check.pass);  // binom(4,3) = 4 = -1 = -binom(0,0)binom(1,1) mod 5
  CHECK(check.observed.value() == 1);

  auto bigger = summand_C_check(2, 4, 11, 2, 1, 1, 1, 5);
  CHECK(bigger.pass);
  CHECK(bigger.observed.value() == 1);

  // Both sides vanish (a binom(0,1) factor): nothing to compare, still a pass.
  auto vacuous = summand_C_check(1, 2, 5, 1, 2, 0, 1, 2);
  CHECK(vacuous.pass);
  CHECK_FALSE(vacuous.observed.has_value());

  auto p3 = summand_C_check(3, 6, 9, 0, 1, 2, 1, 3);
  CHECK(p3.pass);
  CHECK(p3.observed.value() == 3);  // binom(15,6) - binom(5,2) = 4995 = 5 * 3^3 * 37

  CHECK_THROWS_AS(summand_C_check(1, 3, 7, 1, 0, 0, 0, 5), std::invalid_argument);
}

TEST_CASE("G0 primed-sum divisibility") {
  auto check = g0_divisibility_check(1, 1, 5, 2, 1, 1);
  CHECK(check.pass);
  CHECK(check.observed.value() == 4);  // 33600 + 176400 = 210000

  auto cubes = g0_divisibility_check(1, 1, 5, 3, 0, 0);
  CHECK(cubes.pass);
  CHECK(cubes.observed.value() == 3);  // sum of binom(5,k)^3 over p !| k is 2250

  auto wider = g0_divisibility_check(2, 1, 7, 2, 2, 0);
  CHECK(wider.pass);
  CHECK(wider.observed.value() == 3);

  CHECK_THROWS_AS(g0_divisibility_check(1, 1, 3, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g0_divisibility_check(1, 1, 5, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("D-summand two-term difference") {
  // The bracket factor vanishes at these indices on both sides: vacuous passes.
  for (auto p : {5ULL, 3ULL, 2ULL}) {
    auto vacuous = summand_D_check(1, 1, 1, 1, p);
    CHECK(vacuous.pass);
    CHECK_FALSE(vacuous.observed.has_value());
  }

  // Nonvacuous: D(20, 5) and D(4, 1) are both nonzero.
  auto check = summand_D_check(4, 1, 1, 1, 5);
  CHECK(check.required == 3);
  CHECK(check.observed.value() == 4);
  CHECK(check.pass);

  auto p3 = summand_D_check(9, 1, 1, 1, 3);  // D(27, 3) vs D(9, 1), required 3r - 1
  CHECK(p3.required == 2);
  CHECK(p3.observed.value() == 8);
  CHECK(p3.pass);

  auto p2 = summand_D_check(12, 1, 1, 1, 2);  // required 2r
  CHECK(p2.required == 2);
  CHECK(p2.observed.value() == 12);
  CHECK(p2.pass);

  CHECK_THROWS_AS(summand_D_check(1, 5, 1, 1, 5), std::invalid_argument);  // p | k
}

TEST_CASE("randomized lemma suites are clean and deterministic") {
  auto first = run_lemma_suites(30, 424242);
  auto second = run_lemma_suites(30, 424242);
  REQUIRE(first.size() == 8 * 30);
  REQUIRE(second.size() == first.size());

  std::set<std::string> lemmas;
  bool d_saw_p2 = false;
  bool d_saw_p3 = false;
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].lemma == second[i].lemma);
    CHECK(first[i].params == second[i].params);
    CHECK(first[i].check.pass);
    CHECK_FALSE(first[i].check.degenerate);  // degenerate draws are resampled
    lemmas.insert(first[i].lemma);
    if (first[i].lemma == "summand-D") {
      if (first[i].params.at("p") == 2) d_saw_p2 = true;
      if (first[i].params.at("p") == 3) d_saw_p3 = true;
    }
  }
  CHECK(lemmas == std::set<std::string>{"jacobsthal", "power-sum-full", "power-sum-half",
                                        "summand-B", "binomial-reduction", "summand-C",
                                        "g0-divisibility", "summand-D"});
  CHECK(d_saw_p2);
  CHECK(d_saw_p3);

  auto reseeded = run_lemma_suites(30, 17);
  bool all_same = true;
  for (std::size_t i = 0; i < first.size(); ++i) all_same &= (first[i].params == reseeded[i].params);
  CHECK_FALSE(all_same);
}
