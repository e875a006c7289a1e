#include "sporadic/ledger.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace sporadic {

#ifndef SPORADIC_VERSION
#define SPORADIC_VERSION "0.1.0"
#endif

const char* const kToolVersion = SPORADIC_VERSION;

namespace {

Json valuation_to_json(const std::optional<long>& v) {
  if (!v) return Json("inf");
  return Json(*v);
}

}  // namespace

Json to_json(const CongruenceCheck& check) {
  Json j;
  j["sequence"] = to_string(check.sequence);
  j["p"] = check.p;
  j["m"] = check.m;
  j["r"] = check.r;
  j["claimed_exponent"] = check.claimed_exponent;
  j["observed_valuation"] = valuation_to_json(check.observed_valuation);
  j["pass"] = check.pass;
  if (check.conjectural) j["conjectural"] = true;
  if (!check.asserted) j["asserted"] = false;
  return j;
}

Json to_json(const LemmaInstance& instance) {
  Json j;
  j["lemma"] = instance.lemma;
  Json params = Json::object();
  for (const auto& [key, value] : instance.params) params[key] = value;
  j["params"] = params;
  j["required"] = instance.check.required;
  j["observed_valuation"] = valuation_to_json(instance.check.observed);
  j["pass"] = instance.check.pass;
  if (instance.check.degenerate) j["degenerate"] = true;
  return j;
}

Json to_json(const SearchHit& hit) {
  Json j;
  j["model"] = hit.params.model == RecurrenceParams::Model::Cubic ? "cubic" : "quadratic";
  j["a"] = hit.params.a;
  j["b"] = hit.params.b;
  j["c"] = hit.params.c;
  if (hit.params.model == RecurrenceParams::Model::Cubic) j["d"] = hit.params.d;
  j["n_checked"] = hit.n_checked;
  if (hit.known_label) j["label"] = *hit.known_label;
  return j;
}

Json to_json(const CrosscheckReport& report) {
  Json j;
  j["sequence"] = to_string(report.id);
  j["n_checked"] = report.n_checked;
  j["agree"] = report.agree();
  if (report.first_mismatch) j["first_mismatch"] = *report.first_mismatch;
  return j;
}

Json beukers_to_json(std::uint64_t p, const BigInt& a_p, const ValuationCheck& check, bool asserted) {
  Json j;
  j["p"] = p;
  j["apery_index"] = (p - 1) / 2;
  j["a_p"] = a_p.get_str();
  j["required"] = check.required;
  j["observed_valuation"] = valuation_to_json(check.observed);
  j["pass"] = check.pass;
  if (!asserted) j["asserted"] = false;
  return j;
}

Json van_hamme_to_json(const VanHammeResult& result) {
  Json j;
  j["p"] = result.p;
  j["branch"] = result.gamma_branch ? "gamma" : "valuation";
  j["required"] = result.check.required;
  j["observed_valuation"] = valuation_to_json(result.check.observed);
  j["pass"] = result.check.pass;
  return j;
}

Json to_json(const LedgerRecord& record) {
  Json j;
  j["kind"] = record.kind;
  j["payload"] = record.payload;
  j["timestamp"] = record.timestamp;
  j["tool_version"] = record.tool_version;
  return j;
}

LedgerRecord ledger_record_from_json(const Json& j) {
  LedgerRecord record;
  record.kind = j.at("kind").get<std::string>();
  record.payload = j.at("payload");
  record.timestamp = j.at("timestamp").get<std::string>();
  record.tool_version = j.at("tool_version").get<std::string>();
  return record;
}

std::string current_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

LedgerWriter::LedgerWriter(const std::filesystem::path& path) : out_(path, std::ios::app) {
  if (!out_) throw std::runtime_error("cannot open ledger for append: " + path.string());
}

void LedgerWriter::append(const std::string& kind, Json payload) {
  LedgerRecord record{kind, std::move(payload), current_timestamp(), kToolVersion};
  std::lock_guard<std::mutex> lock(mutex_);
  out_ << to_json(record).dump() << '\n';
  out_.flush();
}

std::vector<LedgerRecord> read_ledger(const std::filesystem::path& path,
                                      std::vector<std::string>* errors) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ledger: " + path.string());
  std::vector<LedgerRecord> records;
  std::string line;
  unsigned long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      records.push_back(ledger_record_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      if (errors) errors->push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

namespace {

std::string json_field_string(const Json& payload, const char* key) {
  auto it = payload.find(key);
  if (it == payload.end()) return "-";
  if (it->is_string()) return it->get<std::string>();
  return it->dump();
}

// margin = observed - required, "inf" for a vanished difference
std::optional<std::string> margin_of(const Json& payload) {
  const char* claim_key = payload.contains("claimed_exponent") ? "claimed_exponent"
                          : payload.contains("required")       ? "required"
                                                               : nullptr;
  if (!claim_key || !payload.contains("observed_valuation")) return std::nullopt;
  const Json& observed = payload["observed_valuation"];
  if (observed.is_string()) return std::string("inf");
  long margin = observed.get<long>() - payload[claim_key].get<long>();
  return std::to_string(margin);
}

struct GroupKey {
  std::string kind;
  std::string label;
  long p = -1;
  long r = -1;

  bool operator<(const GroupKey& other) const {
    return std::tie(kind, label, p, r) < std::tie(other.kind, other.label, other.p, other.r);
  }
};

struct GroupStats {
  unsigned long checks = 0;
  unsigned long failures = 0;
  bool has_finite_margin = false;
  bool has_infinite_margin = false;
  long min_margin = 0;
};

}  // namespace

ReportSummary summarize_ledger(const std::vector<LedgerRecord>& records,
                               const std::vector<std::string>& errors) {
  ReportSummary summary;
  summary.records = records.size();
  summary.skipped_lines = errors.size();
  std::map<GroupKey, GroupStats> groups;
  for (const auto& record : records) {
    const Json& payload = record.payload;
    GroupKey key;
    key.kind = record.kind;
    if (payload.contains("sequence")) {
      key.label = json_field_string(payload, "sequence");
    } else if (payload.contains("lemma")) {
      key.label = json_field_string(payload, "lemma");
    } else if (payload.contains("label")) {
      key.label = json_field_string(payload, "label");
    } else {
      key.label = "-";
    }
    if (payload.contains("p") && payload["p"].is_number()) key.p = payload["p"].get<long>();
    if (payload.contains("r") && payload["r"].is_number()) key.r = payload["r"].get<long>();
    auto& stats = groups[key];
    ++stats.checks;
    // Unasserted cells (below a conjecture's threshold) never count as failures.
    bool asserted = !(payload.contains("asserted") && payload["asserted"].is_boolean() &&
                      !payload["asserted"].get<bool>());
    bool failed = asserted && payload.contains("pass") && payload["pass"].is_boolean() &&
                  !payload["pass"].get<bool>();
    if (failed) {
      ++stats.failures;
      ++summary.failures;
      // Reports carry no timestamps, so identical ledgers render identically.
      Json failing;
      failing["kind"] = record.kind;
      failing["payload"] = payload;
      summary.failing.push_back(failing);
    }
    if (auto margin = margin_of(payload)) {
      if (*margin == "inf") {
        stats.has_infinite_margin = true;
      } else {
        long value = std::stol(*margin);
        if (!stats.has_finite_margin || value < stats.min_margin) stats.min_margin = value;
        stats.has_finite_margin = true;
      }
    }
  }
  for (const auto& [key, stats] : groups) {
    ReportRow row;
    row.kind = key.kind;
    row.label = key.label;
    row.p = key.p < 0 ? "-" : std::to_string(key.p);
    row.r = key.r < 0 ? "-" : std::to_string(key.r);
    row.checks = stats.checks;
    row.failures = stats.failures;
    if (stats.has_finite_margin) {
      row.min_margin = std::to_string(stats.min_margin);
    } else if (stats.has_infinite_margin) {
      row.min_margin = "inf";
    } else {
      row.min_margin = "-";
    }
    summary.rows.push_back(row);
  }
  return summary;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format: " + name + " (expected text, csv, or json)");
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string format_report(const ReportSummary& summary, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      Json j;
      j["rows"] = Json::array();
      for (const auto& row : summary.rows) {
        Json r;
        r["kind"] = row.kind;
        r["label"] = row.label;
        r["p"] = row.p;
        r["r"] = row.r;
        r["checks"] = row.checks;
        r["failures"] = row.failures;
        r["min_margin"] = row.min_margin;
        j["rows"].push_back(r);
      }
      j["records"] = summary.records;
      j["skipped_lines"] = summary.skipped_lines;
      j["failures"] = summary.failures;
      j["failing"] = summary.failing;
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      os << "kind,label,p,r,checks,failures,min_margin\n";
      for (const auto& row : summary.rows) {
        os << row.kind << ',' << row.label << ',' << row.p << ',' << row.r << ',' << row.checks << ','
           << row.failures << ',' << row.min_margin << '\n';
      }
      break;
    }
    case OutputFormat::Text: {
      std::size_t label_width = 5;
      for (const auto& row : summary.rows) label_width = std::max(label_width, row.label.size());
      os << pad("kind", 12) << pad("label", label_width + 2) << pad("p", 5) << pad("r", 4)
         << pad("checks", 8) << pad("failures", 10) << "min margin\n";
      for (const auto& row : summary.rows) {
        os << pad(row.kind, 12) << pad(row.label, label_width + 2) << pad(row.p, 5) << pad(row.r, 4)
           << pad(std::to_string(row.checks), 8) << pad(std::to_string(row.failures), 10) << row.min_margin
           << '\n';
      }
      os << summary.records << " records";
      if (summary.skipped_lines) os << ", " << summary.skipped_lines << " unreadable lines skipped";
      os << ", " << summary.failures << " failures\n";
      for (const auto& record : summary.failing) {
        os << "FAIL " << record.dump() << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string format_checks(const std::vector<Json>& payloads, const std::vector<std::string>& kinds,
                          OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      Json array = Json::array();
      for (std::size_t i = 0; i < payloads.size(); ++i) {
        Json j;
        j["kind"] = kinds[i];
        for (const auto& [key, value] : payloads[i].items()) j[key] = value;
        array.push_back(j);
      }
      os << array.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      os << "kind,sequence,p,m,r,claimed_exponent,observed_valuation,pass,conjectural,asserted,detail\n";
      for (std::size_t i = 0; i < payloads.size(); ++i) {
        const Json& p = payloads[i];
        auto field = [&](const char* key) { return json_field_string(p, key); };
        Json detail = Json::object();
        for (const auto& [key, value] : p.items()) {
          static const char* known[] = {"sequence", "p",    "m",           "r",       "claimed_exponent",
                                        "observed_valuation", "pass", "conjectural", "asserted"};
          bool is_known = false;
          for (const char* k : known) is_known |= (key == k);
          if (!is_known) detail[key] = value;
        }
        os << kinds[i] << ',' << field("sequence") << ',' << field("p") << ',' << field("m") << ','
           << field("r") << ',' << field("claimed_exponent") << ',' << field("observed_valuation") << ','
           << field("pass") << ',' << field("conjectural") << ',' << field("asserted") << ','
           << (detail.empty() ? std::string("-") : detail.dump()) << '\n';
      }
      break;
    }
    case OutputFormat::Text: {
      for (std::size_t i = 0; i < payloads.size(); ++i) {
        const Json& p = payloads[i];
        bool pass = p.contains("pass") && p["pass"].is_boolean() && p["pass"].get<bool>();
        os << (pass ? "ok   " : "FAIL ") << kinds[i];
        for (const auto& [key, value] : p.items()) {
          if (key == "pass") continue;
          os << ' ' << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
        }
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

}  // namespace sporadic
