#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "sporadic/analytic.hpp"
#include "sporadic/congruence.hpp"
#include "sporadic/search.hpp"

namespace sporadic {

// ordered_json keeps insertion order, giving every record a canonical,
// byte-stable key order.
using Json = nlohmann::ordered_json;

extern const char* const kToolVersion;

struct LedgerRecord {
  std::string kind;  // two_term | lemma | beukers | van_hamme | search_hit | crosscheck
  Json payload;
  std::string timestamp;
  std::string tool_version;
};

Json to_json(const CongruenceCheck& check);
Json to_json(const LemmaInstance& instance);
Json to_json(const SearchHit& hit);
Json to_json(const CrosscheckReport& report);
Json beukers_to_json(std::uint64_t p, const BigInt& a_p, const ValuationCheck& check, bool asserted);
Json van_hamme_to_json(const VanHammeResult& result);

Json to_json(const LedgerRecord& record);
LedgerRecord ledger_record_from_json(const Json& j);

// ISO-8601 UTC, second resolution.
std::string current_timestamp();

// Append-only JSONL writer; appends are serialized through one mutex.
class LedgerWriter {
 public:
  explicit LedgerWriter(const std::filesystem::path& path);

  void append(const std::string& kind, Json payload);

 private:
  std::ofstream out_;
  std::mutex mutex_;
};

// Reads a JSONL ledger; unparseable lines are described in *errors (when
// non-null) and skipped.
std::vector<LedgerRecord> read_ledger(const std::filesystem::path& path,
                                      std::vector<std::string>* errors = nullptr);

// One report row per (kind, sequence/lemma, p, r) group.
struct ReportRow {
  std::string kind;
  std::string label;  // sequence name, lemma name, or "-"
  std::string p;      // "-" when not applicable
  std::string r;
  unsigned long checks = 0;
  unsigned long failures = 0;
  // smallest observed - claimed margin over the group, "inf" if every
  // difference vanished, "-" when no margin applies
  std::string min_margin;
};

struct ReportSummary {
  std::vector<ReportRow> rows;
  unsigned long records = 0;
  unsigned long skipped_lines = 0;
  unsigned long failures = 0;
  std::vector<Json> failing;  // payloads of failing records, in file order
};

ReportSummary summarize_ledger(const std::vector<LedgerRecord>& records,
                               const std::vector<std::string>& errors);

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_format(const std::string& name);

std::string format_report(const ReportSummary& summary, OutputFormat format);

// Tabular rendering of raw check results (used by `verify`).
std::string format_checks(const std::vector<Json>& payloads, const std::vector<std::string>& kinds,
                          OutputFormat format);

}  // namespace sporadic
