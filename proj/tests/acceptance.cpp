// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sporadic/analytic.hpp"
#include "sporadic/congruence.hpp"
#include "sporadic/search.hpp"

using namespace sporadic;

namespace {

unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

unsigned long count_failures(const std::vector<CongruenceCheck>& checks) {
  unsigned long failures = 0;
  for (const auto& check : checks) {
    if (!check.pass) ++failures;
  }
  return failures;
}

std::string check_tally(const std::vector<CongruenceCheck>& checks) {
  return std::to_string(checks.size()) + " checks, " + std::to_string(count_failures(checks)) +
         " failures";
}

Outcome sequence_oracles() {
  unsigned long mismatches = 0;
  for (const auto& entry : catalog()) {
    if (!crosscheck(entry.id, 60).agree()) ++mismatches;
  }
  return {mismatches == 0,
          "15 sequences, n <= 60, " + std::to_string(mismatches) + " mismatches"};
}

Outcome s_family_grid() {
  GridSpec grid;
  grid.primes = {5, 7, 11};
  grid.m_values = {1, 2};
  grid.r_values = {1, 2};
  grid.rule = {3, 0};
  auto jobs = s_family_grid_jobs({2, 3}, {0, 1, 2}, {0, 1, 2}, grid);
  auto results = run_two_term_jobs(jobs, worker_count());
  return {count_failures(results) == 0 && results.size() == 216, check_tally(results)};
}

Outcome s18_grid() {
  GridSpec grid;
  grid.primes = {2, 3, 5, 7, 11, 13};
  grid.m_values = {1, 2, 3};
  grid.r_values = {1, 2};
  grid.rule = {2, 0};
  auto jobs = grid_jobs({SequenceId(Catalog::S18)}, grid);
  auto results = run_two_term_jobs(jobs, worker_count());
  return {count_failures(results) == 0 && results.size() == 36, check_tally(results)};
}

Outcome s7_prime_instances() {
  unsigned long checks = 0;
  unsigned long failures = 0;
  for (std::uint64_t p = 3; p <= 47; ++p) {
    if (!is_prime(p)) continue;
    ++checks;
    if (!check_two_term(SequenceId(Catalog::S7), p, 1, 1, 3).pass) ++failures;
  }
  return {failures == 0 && checks == 14,
          std::to_string(checks) + " primes (p = 3 conjectural), " + std::to_string(failures) +
              " failures"};
}

Outcome table_suite() {
  GridSpec grid;
  grid.primes = {5, 7};
  grid.m_values = {1, 2};
  grid.r_values = {1, 2};
  auto jobs = table_suite_jobs(grid);
  auto results = run_two_term_jobs(jobs, worker_count());
  return {count_failures(results) == 0 && results.size() == 120, check_tally(results)};
}

Outcome small_prime_conjectures() {
  struct Cell {
    Catalog id;
    std::uint64_t p;
    unsigned m, r;
    long claimed;
  };
  std::vector<Cell> cells;
  for (unsigned m : {4u, 5u}) {
    for (unsigned r : {1u, 2u}) cells.push_back({Catalog::S7, 2, m, r, 3l * r + 2});
  }
  for (unsigned m : {1u, 2u}) {
    for (unsigned r : {1u, 2u}) cells.push_back({Catalog::S7, 3, m, r, 3l * r});
  }
  for (unsigned m : {2u, 3u}) {
    for (unsigned r : {1u, 2u}) cells.push_back({Catalog::S18, 2, m, r, 2l * r + 3});
  }
  for (unsigned m : {3u, 4u}) {
    for (unsigned r : {1u, 2u}) cells.push_back({Catalog::S18, 3, m, r, 3l * r - 1});
  }
  unsigned long failures = 0;
  for (const auto& cell : cells) {
    if (!check_two_term(SequenceId(cell.id), cell.p, cell.m, cell.r, cell.claimed).pass) {
      ++failures;
    }
  }
  return {failures == 0 && cells.size() == 16,
          std::to_string(cells.size()) + " checks, " + std::to_string(failures) + " failures"};
}

Outcome lemma_suites() {
  auto instances = run_lemma_suites(200, 20260815);
  std::map<std::string, unsigned long> counts;
  unsigned long failures = 0;
  bool d_p2 = false;
  bool d_p3 = false;
  for (const auto& inst : instances) {
    ++counts[inst.lemma];
    if (!inst.check.pass) ++failures;
    if (inst.lemma == "summand-D") {
      long p = inst.params.at("p");
      long r = inst.params.at("r");
      if (p == 2 && inst.check.required == 2 * r) d_p2 = true;
      if (p == 3 && inst.check.required == 3 * r - 1) d_p3 = true;
    }
  }
  bool ok = failures == 0 && counts.size() == 8 && d_p2 && d_p3;
  for (const auto& [name, count] : counts) ok &= count >= 200;
  return {ok, std::to_string(instances.size()) + " instances over " +
                  std::to_string(counts.size()) + " predicates, " + std::to_string(failures) +
                  " failures"};
}

Outcome modular_congruence() {
  QExpansion e = eta_q_expansion(97);
  bool ok = e.at(3) == -4 && e.at(5) == -2;
  for (std::uint64_t p : {3ul, 5ul, 7ul}) {
    ok &= e.at(p * p) == e.at(p) * e.at(p) - BigInt(p * p * p);
  }
  unsigned long checks = 0;
  unsigned long failures = 0;
  for (std::uint64_t p = 5; p <= 97; p += 2) {
    if (!is_prime(p)) continue;
    ++checks;
    if (!beukers_check(p, e).pass) ++failures;
  }
  return {ok && failures == 0 && checks == 23,
          std::to_string(checks) + " primes + spot values + Hecke, " + std::to_string(failures) +
              " failures"};
}

Outcome ramanujan_type() {
  bool ok = van_hamme_sum(3) == make_rat(27, 32);
  auto p3 = van_hamme_check(3);
  ok &= !p3.gamma_branch && p3.check.observed.has_value() && *p3.check.observed == 3 &&
        p3.check.pass;
  for (std::uint64_t p : {7ul, 11ul, 19ul, 23ul}) {
    auto result = van_hamme_check(p);
    ok &= !result.gamma_branch && result.check.pass;
  }
  for (std::uint64_t p : {5ul, 13ul, 17ul, 29ul}) {
    auto result = van_hamme_check(p);
    ok &= result.gamma_branch && result.check.pass;
  }
  return {ok, "exact value at p = 3, 8 further primes"};
}

Outcome search_reproduction() {
  auto cubic_hits = search_cubic({0, 20}, {0, 8}, {-200, 200}, {-15, 15}, 50, false, worker_count());
  std::set<std::string> labels;
  for (const auto& hit : cubic_hits) {
    if (hit.known_label) labels.insert(*hit.known_label);
  }
  bool ok = true;
  for (const char* name : {"apery", "avsz-delta", "avsz-eta", "avsz-alpha", "avsz-epsilon",
                           "avsz-zeta", "s10", "s7", "s18"}) {
    ok &= labels.count(name) == 1;
  }

  auto quad_hits = search_quadratic({0, 20}, {0, 8}, {-100, 100}, 50, false, worker_count());
  std::set<std::string> quad_labels;
  for (const auto& hit : quad_hits) {
    if (hit.known_label) quad_labels.insert(*hit.known_label);
  }
  for (const char* name :
       {"zagier-a", "zagier-b", "zagier-c", "zagier-d", "zagier-e", "zagier-f"}) {
    ok &= quad_labels.count(name) == 1;
  }
  return {ok, std::to_string(cubic_hits.size()) + " cubic hits (9 named), " +
                  std::to_string(quad_hits.size()) + " quadratic hits (6 named)"};
}

struct Harness {
  int number = 0;
  bool all_pass = true;

  void run(const char* label, double budget_seconds, Outcome (*criterion)()) {
    ++number;
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool within_budget = budget_seconds <= 0 || seconds < budget_seconds;
    bool ok = outcome.ok && within_budget;
    std::printf("%s %2d  %-44s  %s%s  [%.2fs]\n", ok ? "PASS" : "FAIL", number, label,
                outcome.detail.c_str(), within_budget ? "" : " (over time budget)", seconds);
    std::fflush(stdout);
    all_pass &= ok;
  }
};

}  // namespace

int main() {
  Harness harness;
  harness.run("binomial sums match recurrence values", 10.0, sequence_oracles);
  harness.run("S-family congruence grid at exponent 3r", 60.0, s_family_grid);
  harness.run("s18 congruence grid at exponent 2r", 30.0, s18_grid);
  harness.run("s7 two-term instances for 3 <= p <= 47", 0.0, s7_prime_instances);
  harness.run("catalog suite at tabulated exponents", 120.0, table_suite);
  harness.run("conjectured p = 2, 3 congruences", 0.0, small_prime_conjectures);
  harness.run("randomized lemma suites, 200 per predicate", 0.0, lemma_suites);
  harness.run("modular coefficient congruence to p = 97", 0.0, modular_congruence);
  harness.run("hypergeometric congruence branches", 5.0, ramanujan_type);
  harness.run("recurrence integrality search boxes", 300.0, search_reproduction);
  std::printf("%s\n", harness.all_pass ? "acceptance: all 10 criteria passed"
                                       : "acceptance: FAILURES PRESENT");
  return harness.all_pass ? 0 : 1;
}
