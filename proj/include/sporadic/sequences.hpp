#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sporadic/exact.hpp"

namespace sporadic {

// The fifteen cataloged sequences: the six quadratic-recurrence rows A-F and
// the nine cubic-recurrence rows (delta, eta, alpha, epsilon, zeta, the Apery
// numbers, s10, s7, s18). Enum order is the canonical listing order.
enum class Catalog {
  Apery,
  ZagierA,
  ZagierB,
  ZagierC,
  ZagierD,
  ZagierE,
  ZagierF,
  AVSZDelta,
  AVSZEta,
  AVSZAlpha,
  AVSZEpsilon,
  AVSZZeta,
  S10,
  S7,
  S18,
};

// sum_k binom(n,k)^A binom(n+k,k)^B binom(2k,n)^C
struct SFamily {
  unsigned A = 0, B = 0, C = 0;
  auto operator<=>(const SFamily&) const = default;
};

// T(0) = 1; T(n) = sum_{k<=n/3} (-1)^k binom(n,k)^A binom(2k,k)^B
//   binom(2(n-k),n-k)^C [binom(2n-3k-1,n)^D + binom(2n-3k,n)^E]
struct TFamily {
  unsigned A = 0, B = 0, C = 0, D = 0, E = 0;
  auto operator<=>(const TFamily&) const = default;
};

// sum_k (-1)^{eps k} binom(n,k)^a binom(2n,k)^b
struct UFamily {
  unsigned eps = 0;  // 0 or 1
  unsigned a = 0, b = 0;
  auto operator<=>(const UFamily&) const = default;
};

using SequenceId = std::variant<Catalog, SFamily, TFamily, UFamily>;

// Canonical names: "apery", "zagier-a".."zagier-f", "avsz-delta", "avsz-eta",
// "avsz-alpha", "avsz-epsilon", "avsz-zeta", "s10", "s7", "s18",
// "S:A,B,C", "T:A,B,C,D,E", "U:eps,a,b".
std::string to_string(const SequenceId& id);
std::string to_string(Catalog c);

// Inverse of to_string (family prefixes case-insensitive; "avsz-gamma" and
// "z" accepted as aliases for the Apery row and the Z-sequence row).
// Throws std::invalid_argument on anything unrecognized.
SequenceId parse_sequence(const std::string& text);

// Total order used wherever results must come out in a canonical sequence.
bool sequence_less(const SequenceId& lhs, const SequenceId& rhs);

struct RecurrenceParams {
  enum class Model { Cubic, Quadratic };
  Model model = Model::Cubic;
  long a = 0, b = 0, c = 0, d = 0;  // d unused for the quadratic model

  auto operator<=>(const RecurrenceParams&) const = default;
};

std::string to_string(const RecurrenceParams& p);

// One catalog row: its name, the recurrence tuple the binomial sum actually
// satisfies, the tuple as tabulated (these differ only for s18, where the
// commonly printed (c,d) signs do not produce an integer sequence), the
// congruence exponent multiplier k, and whether the congruence is conjectural.
struct CatalogEntry {
  Catalog id;
  std::string name;
  RecurrenceParams recurrence;
  RecurrenceParams tabulated;
  int exponent_k = 3;
  bool conjectural = false;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(Catalog id);

// --- evaluation ---------------------------------------------------------

BigInt eval_S(unsigned long n, unsigned A, unsigned B, unsigned C);
BigInt eval_T(unsigned long n, unsigned A, unsigned B, unsigned C, unsigned D, unsigned E);
BigInt eval_U(unsigned long n, unsigned eps, unsigned a, unsigned b);
BigInt eval_catalog(Catalog id, unsigned long n);
BigInt eval_sequence(const SequenceId& id, unsigned long n);

// Exact values s(0..n_max) of the recurrence with s(-1) = 0, s(0) = 1.
// Rational because nothing forces integrality for arbitrary parameters.
std::vector<BigRat> recur_eval(const RecurrenceParams& params, unsigned long n_max);

struct CrosscheckReport {
  Catalog id;
  unsigned long n_checked = 0;
  std::optional<unsigned long> first_mismatch;  // empty: sum and recurrence agree

  bool agree() const { return !first_mismatch.has_value(); }
};

// Term-by-term comparison of the binomial sum against its recurrence tuple.
CrosscheckReport crosscheck(Catalog id, unsigned long n_max);

// --- on-disk value cache -------------------------------------------------

// One file per sequence under `dir`, lines "n<TAB>decimal-value". Unreadable
// or malformed entries are ignored on load; flush() rewrites atomically.
class SequenceCache {
 public:
  explicit SequenceCache(std::filesystem::path dir);

  std::optional<BigInt> lookup(const SequenceId& id, unsigned long n);
  void store(const SequenceId& id, unsigned long n, const BigInt& value);
  void flush();

  const std::filesystem::path& dir() const { return dir_; }

 private:
  struct PerSequence {
    std::map<unsigned long, BigInt> values;
    bool dirty = false;
    bool loaded = false;
  };

  PerSequence& slot(const SequenceId& id);
  std::filesystem::path file_for(const SequenceId& id) const;

  std::filesystem::path dir_;
  std::map<std::string, PerSequence> slots_;  // keyed by canonical name
};

// Cache-aware evaluation; cache may be null.
BigInt eval_sequence_cached(const SequenceId& id, unsigned long n, SequenceCache* cache);

}  // namespace sporadic
