// sporadic: exact evaluation of the cataloged binomial-sum sequences, batch
// verification of their two-term congruences, the eta-product and van Hamme
// checks, and the recurrence-integrality search.
//
// Subcommands: compute, verify, search, eta, report. Exit status: 0 when all
// asserted checks pass, 1 on failures, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sporadic/analytic.hpp"
#include "sporadic/congruence.hpp"
#include "sporadic/ledger.hpp"
#include "sporadic/parallel.hpp"
#include "sporadic/search.hpp"
#include "sporadic/sequences.hpp"

namespace {

using namespace sporadic;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- flag parsing ----------------------------------------------------------

// "0..3" -> 0,1,2,3; "5" -> 5; "0,2,4" -> 0,2,4
std::vector<unsigned long> parse_index_list(const std::string& text) {
  std::vector<unsigned long> out;
  auto parse_one = [](const std::string& piece) {
    std::size_t used = 0;
    unsigned long value = std::stoul(piece, &used);
    if (used != piece.size()) throw UsageError("bad index: '" + piece + "'");
    return value;
  };
  try {
    auto dots = text.find("..");
    if (dots != std::string::npos) {
      unsigned long lo = parse_one(text.substr(0, dots));
      unsigned long hi = parse_one(text.substr(dots + 2));
      if (hi < lo) throw UsageError("empty range: '" + text + "'");
      if (hi - lo > 1000000) throw UsageError("range too large: '" + text + "'");
      for (unsigned long n = lo; n <= hi; ++n) out.push_back(n);
      return out;
    }
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(parse_one(piece));
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse '" + text + "' (expected N, N..M, or N,M,...)");
  }
  if (out.empty()) throw UsageError("empty list: '" + text + "'");
  return out;
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> primes;
  for (unsigned long v : parse_index_list(text)) {
    if (!is_prime(v)) throw UsageError("not a prime: " + std::to_string(v));
    primes.push_back(v);
  }
  return primes;
}

std::vector<unsigned> parse_small_list(const std::string& text, const char* what) {
  std::vector<unsigned> out;
  for (unsigned long v : parse_index_list(text)) {
    if (v == 0 || v > 1000000) throw UsageError(std::string(what) + " out of range: " + std::to_string(v));
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

// "lo..hi" or a single value.
ParamRange parse_param_range(const std::string& text, const char* what) {
  auto parse_one = [&](const std::string& piece) {
    std::size_t used = 0;
    long value = std::stol(piece, &used);
    if (used != piece.size()) throw UsageError(std::string("bad ") + what + " bound: '" + piece + "'");
    return value;
  };
  try {
    auto dots = text.find("..", text.empty() || text[0] != '-' ? 0 : 1);
    if (dots == std::string::npos) {
      long v = parse_one(text);
      return ParamRange{v, v};
    }
    return ParamRange{parse_one(text.substr(0, dots)), parse_one(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError(std::string("cannot parse ") + what + " range '" + text + "' (expected LO..HI)");
  }
}

// --- output plumbing ---------------------------------------------------------

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file: " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string catalog_listing() {
  std::string s = "known sequences:";
  for (const auto& entry : catalog()) s += " " + to_string(entry.id);
  s += "; families: S:A,B,C  T:A,B,C,D,E  U:eps,a,b";
  return s;
}

// --- shared verify state -----------------------------------------------------

struct VerifyFlags {
  std::string selector;
  std::string primes_text;
  std::string m_text;
  std::string r_text;
  unsigned jobs = 0;
  std::string ledger_path = "sporadic.ledger.jsonl";
  std::string format = "text";
  std::string output;
  bool strict = false;
  unsigned lemma_count = 200;
  std::uint64_t lemma_seed = 20260815;
};

std::vector<std::uint64_t> primes_or_default(const VerifyFlags& flags,
                                             std::vector<std::uint64_t> fallback) {
  if (flags.primes_text.empty()) return fallback;
  return parse_prime_list(flags.primes_text);
}

std::vector<unsigned> values_or_default(const std::string& text, const char* what,
                                        std::vector<unsigned> fallback) {
  if (text.empty()) return fallback;
  return parse_small_list(text, what);
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 3; p <= bound; ++p)
    if (is_prime(p)) primes.push_back(p);
  return primes;
}

struct VerifyOutcome {
  std::vector<Json> payloads;
  std::vector<std::string> kinds;
  unsigned long failures = 0;             // asserted, non-conjectural (or --strict)
  unsigned long conjectural_failures = 0; // reported only
};

void absorb_two_term(VerifyOutcome& outcome, const std::vector<CongruenceCheck>& checks, bool strict) {
  for (const auto& check : checks) {
    outcome.payloads.push_back(to_json(check));
    outcome.kinds.emplace_back("two_term");
    if (check.pass || !check.asserted) continue;
    if (check.conjectural && !strict) {
      ++outcome.conjectural_failures;
    } else {
      ++outcome.failures;
    }
  }
}

// --- verify selectors ----------------------------------------------------------

VerifyOutcome verify_s_family(const VerifyFlags& flags, unsigned jobs) {
  GridSpec grid;
  grid.primes = primes_or_default(flags, {5, 7, 11});
  grid.m_values = values_or_default(flags.m_text, "m", {1, 2});
  grid.r_values = values_or_default(flags.r_text, "r", {1, 2});
  grid.rule = {3, 0};
  auto jobs_list = s_family_grid_jobs({2, 3}, {0, 1, 2}, {0, 1, 2}, grid);
  VerifyOutcome outcome;
  absorb_two_term(outcome, run_two_term_jobs(jobs_list, jobs), flags.strict);
  return outcome;
}

VerifyOutcome verify_s18_quadratic(const VerifyFlags& flags, unsigned jobs) {
  GridSpec grid;
  grid.primes = primes_or_default(flags, {2, 3, 5, 7, 11, 13});
  grid.m_values = values_or_default(flags.m_text, "m", {1, 2, 3});
  grid.r_values = values_or_default(flags.r_text, "r", {1, 2});
  grid.rule = {2, 0};
  auto jobs_list = grid_jobs({SequenceId(Catalog::S18)}, grid);
  VerifyOutcome outcome;
  absorb_two_term(outcome, run_two_term_jobs(jobs_list, jobs), flags.strict);
  return outcome;
}

VerifyOutcome verify_tables(const VerifyFlags& flags, unsigned jobs) {
  GridSpec grid;
  grid.primes = primes_or_default(flags, {5, 7});
  grid.m_values = values_or_default(flags.m_text, "m", {1, 2});
  grid.r_values = values_or_default(flags.r_text, "r", {1, 2});
  grid.rule = {3, 0};  // overridden per entry by the builder
  auto jobs_list = table_suite_jobs(grid);
  VerifyOutcome outcome;
  absorb_two_term(outcome, run_two_term_jobs(jobs_list, jobs), flags.strict);
  return outcome;
}

VerifyOutcome verify_small_prime_conjectures(const VerifyFlags& flags, unsigned jobs) {
  auto primes = primes_or_default(flags, {2, 3});
  for (auto p : primes)
    if (p != 2 && p != 3) throw UsageError("conj23 covers p = 2 and p = 3 only (got " + std::to_string(p) + ")");
  unsigned m_max = 5;
  if (!flags.m_text.empty()) {
    m_max = 0;
    for (unsigned m : parse_small_list(flags.m_text, "m")) m_max = std::max(m_max, m);
  }
  unsigned r_max = 2;
  if (!flags.r_text.empty()) {
    r_max = 0;
    for (unsigned r : parse_small_list(flags.r_text, "r")) r_max = std::max(r_max, r);
  }
  std::vector<TwoTermJob> jobs_list;
  for (Catalog id : {Catalog::S7, Catalog::S18}) {
    for (const auto& job : small_prime_conjecture_jobs(id, m_max, r_max)) {
      bool wanted = false;
      for (auto p : primes) wanted |= (job.p == p);
      if (wanted) jobs_list.push_back(job);
    }
  }
  VerifyOutcome outcome;
  absorb_two_term(outcome, run_two_term_jobs(jobs_list, jobs), flags.strict);
  return outcome;
}

VerifyOutcome verify_lemmas(const VerifyFlags& flags) {
  auto instances = run_lemma_suites(flags.lemma_count, flags.lemma_seed);
  VerifyOutcome outcome;
  for (const auto& instance : instances) {
    outcome.payloads.push_back(to_json(instance));
    outcome.kinds.emplace_back("lemma");
    if (!instance.check.pass) ++outcome.failures;
  }
  return outcome;
}

VerifyOutcome verify_eta_beukers(const VerifyFlags& flags) {
  auto primes = primes_or_default(flags, odd_primes_up_to(97));
  std::uint64_t max_p = 0;
  for (auto p : primes) {
    if (p == 2) throw UsageError("eta-beukers needs odd primes (the even coefficients vanish)");
    max_p = std::max(max_p, p);
  }
  auto expansion = eta_q_expansion(std::max<std::uint64_t>(max_p, 11));
  VerifyOutcome outcome;
  for (auto p : primes) {
    auto check = beukers_check(p, expansion);
    bool asserted = p >= 5;
    outcome.payloads.push_back(beukers_to_json(p, expansion.at(p), check, asserted));
    outcome.kinds.emplace_back("beukers");
    if (!check.pass && asserted) ++outcome.failures;
  }
  return outcome;
}

VerifyOutcome verify_van_hamme(const VerifyFlags& flags) {
  auto primes = primes_or_default(flags, {3, 5, 7, 11, 13, 17, 19, 23, 29});
  VerifyOutcome outcome;
  for (auto p : primes) {
    if (p == 2) throw UsageError("van Hamme check needs odd primes");
    auto result = van_hamme_check(p);
    outcome.payloads.push_back(van_hamme_to_json(result));
    outcome.kinds.emplace_back("van_hamme");
    if (!result.check.pass) ++outcome.failures;
  }
  return outcome;
}

VerifyOutcome verify_z_sequence(const VerifyFlags& flags, unsigned jobs) {
  GridSpec grid;
  grid.primes = primes_or_default(flags, {5, 7, 11});
  for (auto p : grid.primes)
    if (p < 5) throw UsageError("this congruence is claimed for primes >= 5 (got " + std::to_string(p) + ")");
  grid.m_values = values_or_default(flags.m_text, "m", {1, 2});
  grid.r_values = values_or_default(flags.r_text, "r", {1, 2});
  grid.rule = {3, 0};
  auto jobs_list = grid_jobs({SequenceId(Catalog::AVSZEta)}, grid);
  VerifyOutcome outcome;
  absorb_two_term(outcome, run_two_term_jobs(jobs_list, jobs), flags.strict);
  return outcome;
}

VerifyOutcome verify_t_family(const VerifyFlags& flags, unsigned jobs) {
  // Exponent 2r needs A, B, C >= 1 and holds at every prime; exponent 3r
  // additionally needs A >= 2 and p >= 5.
  std::vector<SequenceId> two_r = {
      TFamily{1, 1, 1, 1, 1}, TFamily{1, 1, 1, 0, 1}, TFamily{1, 2, 1, 1, 1}, TFamily{1, 1, 2, 1, 0}};
  std::vector<SequenceId> three_r = {TFamily{2, 1, 1, 1, 1}, TFamily{2, 2, 1, 1, 1},
                                     TFamily{3, 1, 1, 0, 1}};

  GridSpec grid2;
  grid2.primes = primes_or_default(flags, {2, 3, 5, 7});
  grid2.m_values = values_or_default(flags.m_text, "m", {1, 2});
  grid2.r_values = values_or_default(flags.r_text, "r", {1, 2});
  grid2.rule = {2, 0};

  GridSpec grid3 = grid2;
  grid3.rule = {3, 0};
  grid3.primes.clear();
  for (auto p : grid2.primes)
    if (p >= 5) grid3.primes.push_back(p);

  auto jobs_list = grid_jobs(two_r, grid2);
  if (!grid3.primes.empty()) {
    auto more = grid_jobs(three_r, grid3);
    jobs_list.insert(jobs_list.end(), more.begin(), more.end());
  }
  VerifyOutcome outcome;
  absorb_two_term(outcome, run_two_term_jobs(jobs_list, jobs), flags.strict);
  return outcome;
}

VerifyOutcome verify_u_family(const VerifyFlags& flags, unsigned jobs) {
  GridSpec grid;
  grid.primes = primes_or_default(flags, {5, 7, 11});
  grid.m_values = values_or_default(flags.m_text, "m", {1, 2});
  grid.r_values = values_or_default(flags.r_text, "r", {1, 2});
  grid.rule = {3, 0};
  std::vector<UFamily> ids = {UFamily{0, 1, 1}, UFamily{1, 1, 1}, UFamily{0, 2, 0}, UFamily{1, 2, 0},
                              UFamily{0, 0, 2}, UFamily{1, 0, 2}, UFamily{1, 2, 1}};
  auto jobs_list = u_family_grid_jobs(ids, grid);
  VerifyOutcome outcome;
  absorb_two_term(outcome, run_two_term_jobs(jobs_list, jobs), flags.strict);
  return outcome;
}

int cmd_verify(const VerifyFlags& flags) {
  unsigned jobs = flags.jobs == 0 ? default_jobs() : flags.jobs;
  VerifyOutcome outcome;
  if (flags.selector == "thm1.2") {
    outcome = verify_s_family(flags, jobs);
  } else if (flags.selector == "thm1.3") {
    outcome = verify_s18_quadratic(flags, jobs);
  } else if (flags.selector == "tables") {
    outcome = verify_tables(flags, jobs);
  } else if (flags.selector == "conj23") {
    outcome = verify_small_prime_conjectures(flags, jobs);
  } else if (flags.selector == "lemmas") {
    outcome = verify_lemmas(flags);
  } else if (flags.selector == "eta-beukers") {
    outcome = verify_eta_beukers(flags);
  } else if (flags.selector == "vanhamme") {
    outcome = verify_van_hamme(flags);
  } else if (flags.selector == "example3.1") {
    outcome = verify_z_sequence(flags, jobs);
  } else if (flags.selector == "example3.2") {
    outcome = verify_t_family(flags, jobs);
  } else if (flags.selector == "example3.3") {
    outcome = verify_u_family(flags, jobs);
  } else {
    throw UsageError(
        "unknown selector '" + flags.selector +
        "' (expected thm1.2, thm1.3, tables, conj23, lemmas, eta-beukers, vanhamme, example3.1, "
        "example3.2, or example3.3)");
  }

  LedgerWriter ledger(flags.ledger_path);
  for (std::size_t i = 0; i < outcome.payloads.size(); ++i)
    ledger.append(outcome.kinds[i], outcome.payloads[i]);

  OutputSink sink(flags.output);
  OutputFormat format = parse_format(flags.format);
  sink.stream() << format_checks(outcome.payloads, outcome.kinds, format);
  if (format == OutputFormat::Text) {
    sink.stream() << outcome.payloads.size() << " checks, " << outcome.failures << " failures";
    if (outcome.conjectural_failures)
      sink.stream() << ", " << outcome.conjectural_failures << " conjectural failures not asserted";
    sink.stream() << '\n';
  }
  return outcome.failures == 0 ? 0 : 1;
}

// --- other subcommands -----------------------------------------------------

int cmd_compute(const std::string& name, const std::string& n_text, const std::string& cache_dir,
                const std::string& format_name, const std::string& output) {
  SequenceId id;
  try {
    id = parse_sequence(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + "; " + catalog_listing());
  }
  auto indices = parse_index_list(n_text);

  std::string dir = cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("SPORADIC_CACHE_DIR")) dir = env;
  }
  std::optional<SequenceCache> cache;
  if (!dir.empty()) cache.emplace(dir);

  OutputSink sink(output);
  OutputFormat format = parse_format(format_name);
  if (format == OutputFormat::Csv) sink.stream() << "n,value\n";
  Json rows = Json::array();
  for (unsigned long n : indices) {
    BigInt value = eval_sequence_cached(id, n, cache ? &*cache : nullptr);
    switch (format) {
      case OutputFormat::Text:
        sink.stream() << to_string(id) << '(' << n << ") = " << value.get_str() << '\n';
        break;
      case OutputFormat::Csv:
        sink.stream() << n << ',' << value.get_str() << '\n';
        break;
      case OutputFormat::Json: {
        Json row;
        row["n"] = n;
        row["value"] = value.get_str();
        rows.push_back(row);
        break;
      }
    }
  }
  if (format == OutputFormat::Json) sink.stream() << rows.dump(2) << '\n';
  if (cache) cache->flush();
  return 0;
}

int cmd_search(const std::string& model, const std::string& a_text, const std::string& b_text,
               const std::string& c_text, const std::string& d_text, unsigned long n_max, bool deep,
               unsigned jobs_flag, const std::string& ledger_path, const std::string& output) {
  unsigned jobs = jobs_flag == 0 ? default_jobs() : jobs_flag;
  ParamRange a = parse_param_range(a_text, "a");
  ParamRange b = parse_param_range(b_text, "b");
  ParamRange c = parse_param_range(c_text, "c");

  std::vector<SearchHit> hits;
  if (model == "cubic") {
    if (d_text.empty()) throw UsageError("cubic model needs --d LO..HI");
    ParamRange d = parse_param_range(d_text, "d");
    hits = search_cubic(a, b, c, d, n_max, deep, jobs);
  } else if (model == "quadratic") {
    if (!d_text.empty()) throw UsageError("quadratic model has no d parameter");
    hits = search_quadratic(a, b, c, n_max, deep, jobs);
  } else {
    throw UsageError("unknown model '" + model + "' (expected cubic or quadratic)");
  }

  LedgerWriter ledger(ledger_path);
  OutputSink sink(output);
  for (const auto& hit : hits) {
    Json payload = to_json(hit);
    ledger.append("search_hit", payload);
    sink.stream() << payload.dump() << '\n';
  }
  std::cerr << hits.size() << " integral tuples\n";
  return 0;
}

int cmd_eta(unsigned long limit, const std::string& output) {
  if (limit == 0) throw UsageError("--limit must be positive");
  auto expansion = eta_q_expansion(limit);
  OutputSink sink(output);
  sink.stream() << "n,a(n)\n";
  for (std::size_t n = 0; n <= expansion.limit(); ++n)
    sink.stream() << n << ',' << expansion.at(n).get_str() << '\n';
  return 0;
}

int cmd_report(const std::string& ledger_path, const std::string& format_name,
               const std::string& output) {
  std::vector<std::string> errors;
  std::vector<LedgerRecord> records;
  try {
    records = read_ledger(ledger_path, &errors);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  auto summary = summarize_ledger(records, errors);
  OutputSink sink(output);
  sink.stream() << format_report(summary, parse_format(format_name));
  for (const auto& error : errors) std::cerr << "skipped: " << error << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for sporadic sequences and their congruences"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "evaluate a sequence at the given indices");
  std::string compute_name;
  std::string compute_n;
  std::string compute_cache_dir;
  std::string compute_format = "text";
  std::string compute_output;
  compute->add_option("sequence", compute_name, "catalog name or S:/T:/U: family syntax")->required();
  compute->add_option("--n", compute_n, "index or range, e.g. 12 or 0..20")->required();
  compute->add_option("--cache-dir", compute_cache_dir, "value cache directory (default $SPORADIC_CACHE_DIR)");
  compute->add_option("--format", compute_format, "text, csv, or json");
  compute->add_option("--output", compute_output, "write to this file instead of standard output");

  // verify
  auto* verify = app.add_subcommand("verify", "run a batch of congruence checks");
  VerifyFlags vf;
  verify->add_option("selector", vf.selector,
                     "thm1.2 | thm1.3 | tables | conj23 | lemmas | eta-beukers | vanhamme | "
                     "example3.1 | example3.2 | example3.3")
      ->required();
  verify->add_option("--primes", vf.primes_text, "comma-separated primes");
  verify->add_option("--m", vf.m_text, "m values, e.g. 1..2 or 1,3");
  verify->add_option("--r", vf.r_text, "r values, e.g. 1..2");
  verify->add_option("--jobs", vf.jobs, "worker threads (default: hardware)");
  verify->add_option("--ledger", vf.ledger_path, "JSONL ledger to append to");
  verify->add_option("--format", vf.format, "text, csv, or json");
  verify->add_option("--output", vf.output, "write to this file instead of standard output");
  verify->add_flag("--strict", vf.strict, "conjectural failures also flip the exit status");
  verify->add_option("--count", vf.lemma_count, "instances per lemma suite (lemmas selector)");
  verify->add_option("--seed", vf.lemma_seed, "random seed (lemmas selector)");

  // search
  auto* search = app.add_subcommand("search", "find integral recurrence tuples over a box");
  std::string search_model;
  std::string search_a, search_b, search_c, search_d;
  unsigned long search_nmax = 50;
  bool search_deep = false;
  unsigned search_jobs = 0;
  std::string search_ledger = "sporadic.ledger.jsonl";
  std::string search_output;
  search->add_option("--model", search_model, "cubic or quadratic")->required();
  search->add_option("--a", search_a, "a range LO..HI")->required();
  search->add_option("--b", search_b, "b range LO..HI")->required();
  search->add_option("--c", search_c, "c range LO..HI")->required();
  search->add_option("--d", search_d, "d range LO..HI (cubic only)");
  search->add_option("--nmax", search_nmax, "integrality depth (default 50)");
  search->add_flag("--deep", search_deep, "re-verify hits to twice the depth");
  search->add_option("--jobs", search_jobs, "worker threads (default: hardware)");
  search->add_option("--ledger", search_ledger, "JSONL ledger to append to");
  search->add_option("--output", search_output, "write hits to this file instead of standard output");

  // eta
  auto* eta = app.add_subcommand("eta", "print q-expansion coefficients as CSV");
  unsigned long eta_limit = 100;
  std::string eta_output;
  eta->add_option("--limit", eta_limit, "highest exponent to print (default 100)");
  eta->add_option("--output", eta_output, "write to this file instead of standard output");

  // report
  auto* report = app.add_subcommand("report", "summarize a ledger");
  std::string report_ledger = "sporadic.ledger.jsonl";
  std::string report_format = "text";
  std::string report_output;
  report->add_option("ledger", report_ledger, "ledger path (default sporadic.ledger.jsonl)");
  report->add_option("--format", report_format, "text, csv, or json");
  report->add_option("--output", report_output, "write to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return cmd_compute(compute_name, compute_n, compute_cache_dir, compute_format, compute_output);
    if (verify->parsed()) return cmd_verify(vf);
    if (search->parsed())
      return cmd_search(search_model, search_a, search_b, search_c, search_d, search_nmax, search_deep,
                        search_jobs, search_ledger, search_output);
    if (eta->parsed()) return cmd_eta(eta_limit, eta_output);
    if (report->parsed()) return cmd_report(report_ledger, report_format, report_output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
