#include "sporadic/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sporadic/binomial.hpp"

namespace sporadic {

namespace {

// (-1)^k
int parity_sign(unsigned long k) { return (k % 2 == 0) ? 1 : -1; }

BigInt pow3(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

BigInt pow8(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 8, e);
  return r;
}

// (3k)! / k!^3
BigInt trinomial_central(unsigned long k) {
  BigInt num = factorial(3 * k);
  BigInt den = pow_int(factorial(k), 3);
  BigInt r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

// Multiplies acc by f^e, treating e == 0 as a no-op (so vanishing factors
// with exponent zero do not kill the term). Returns false once the whole
// term is known to be zero.
bool mul_pow(BigInt& acc, const BigInt& f, unsigned e) {
  if (e == 0) return true;
  if (sgn(f) == 0) return false;
  acc *= (e == 1) ? f : pow_int(f, e);
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

unsigned parse_small_uint(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer field");
  std::size_t pos = 0;
  unsigned long v = std::stoul(s, &pos);
  if (pos != s.size() || v > 1000000) throw std::invalid_argument("bad integer field: " + s);
  return static_cast<unsigned>(v);
}

}  // namespace

// --- catalog ---------------------------------------------------------------

const std::vector<CatalogEntry>& catalog() {
  using M = RecurrenceParams::Model;
  static const std::vector<CatalogEntry> entries = {
      {Catalog::Apery, "apery", {M::Cubic, 17, 5, 1, 0}, {M::Cubic, 17, 5, 1, 0}, 3, false},
      {Catalog::ZagierA, "zagier-a", {M::Quadratic, 7, 2, -8, 0}, {M::Quadratic, 7, 2, -8, 0}, 3, false},
      {Catalog::ZagierB, "zagier-b", {M::Quadratic, 9, 3, 27, 0}, {M::Quadratic, 9, 3, 27, 0}, 2, true},
      {Catalog::ZagierC, "zagier-c", {M::Quadratic, 10, 3, 9, 0}, {M::Quadratic, 10, 3, 9, 0}, 2, false},
      {Catalog::ZagierD, "zagier-d", {M::Quadratic, 11, 3, -1, 0}, {M::Quadratic, 11, 3, -1, 0}, 3, false},
      {Catalog::ZagierE, "zagier-e", {M::Quadratic, 12, 4, 32, 0}, {M::Quadratic, 12, 4, 32, 0}, 2, false},
      {Catalog::ZagierF, "zagier-f", {M::Quadratic, 17, 6, 72, 0}, {M::Quadratic, 17, 6, 72, 0}, 2, true},
      {Catalog::AVSZDelta, "avsz-delta", {M::Cubic, 7, 3, 81, 0}, {M::Cubic, 7, 3, 81, 0}, 3, false},
      {Catalog::AVSZEta, "avsz-eta", {M::Cubic, 11, 5, 125, 0}, {M::Cubic, 11, 5, 125, 0}, 3, false},
      {Catalog::AVSZAlpha, "avsz-alpha", {M::Cubic, 10, 4, 64, 0}, {M::Cubic, 10, 4, 64, 0}, 3, false},
      {Catalog::AVSZEpsilon, "avsz-epsilon", {M::Cubic, 12, 4, 16, 0}, {M::Cubic, 12, 4, 16, 0}, 3, false},
      {Catalog::AVSZZeta, "avsz-zeta", {M::Cubic, 9, 3, -27, 0}, {M::Cubic, 9, 3, -27, 0}, 3, false},
      {Catalog::S10, "s10", {M::Cubic, 6, 2, -64, 4}, {M::Cubic, 6, 2, -64, 4}, 3, false},
      {Catalog::S7, "s7", {M::Cubic, 13, 4, -27, 3}, {M::Cubic, 13, 4, -27, 3}, 3, false},
      // The binomial sum satisfies (c,d) = (192, -12); the commonly printed
      // signs (-192, 12) do not even stay integral (they first fail at n = 4).
      {Catalog::S18, "s18", {M::Cubic, 14, 6, 192, -12}, {M::Cubic, 14, 6, -192, 12}, 2, false},
  };
  return entries;
}

const CatalogEntry& catalog_entry(Catalog id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw std::logic_error("catalog_entry: unknown id");
}

// --- names -------------------------------------------------------------------

std::string to_string(Catalog c) { return catalog_entry(c).name; }

std::string to_string(const SequenceId& id) {
  struct Visitor {
    std::string operator()(Catalog c) const { return to_string(c); }
    std::string operator()(const SFamily& s) const {
      return "S:" + std::to_string(s.A) + "," + std::to_string(s.B) + "," + std::to_string(s.C);
    }
    std::string operator()(const TFamily& t) const {
      return "T:" + std::to_string(t.A) + "," + std::to_string(t.B) + "," + std::to_string(t.C) + "," +
             std::to_string(t.D) + "," + std::to_string(t.E);
    }
    std::string operator()(const UFamily& u) const {
      return "U:" + std::to_string(u.eps) + "," + std::to_string(u.a) + "," + std::to_string(u.b);
    }
  };
  return std::visit(Visitor{}, id);
}

SequenceId parse_sequence(const std::string& text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s.size() >= 2 && s[1] == ':') {
    auto fields = split(s.substr(2), ',');
    std::vector<unsigned> v;
    v.reserve(fields.size());
    for (auto& f : fields) v.push_back(parse_small_uint(f));
    switch (s[0]) {
      case 's':
        if (v.size() != 3) throw std::invalid_argument("S-family takes A,B,C: " + text);
        return SFamily{v[0], v[1], v[2]};
      case 't':
        if (v.size() != 5) throw std::invalid_argument("T-family takes A,B,C,D,E: " + text);
        return TFamily{v[0], v[1], v[2], v[3], v[4]};
      case 'u':
        if (v.size() != 3) throw std::invalid_argument("U-family takes eps,a,b: " + text);
        if (v[0] > 1) throw std::invalid_argument("U-family eps must be 0 or 1: " + text);
        return UFamily{v[0], v[1], v[2]};
      default:
        throw std::invalid_argument("unknown sequence family: " + text);
    }
  }
  if (s == "avsz-gamma") return Catalog::Apery;
  if (s == "z") return Catalog::AVSZEta;
  for (const auto& e : catalog()) {
    if (s == e.name) return e.id;
  }
  throw std::invalid_argument("unknown sequence: " + text);
}

bool sequence_less(const SequenceId& lhs, const SequenceId& rhs) {
  if (lhs.index() != rhs.index()) return lhs.index() < rhs.index();
  return std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        return l < std::get<T>(rhs);
      },
      lhs);
}

std::string to_string(const RecurrenceParams& p) {
  std::ostringstream os;
  os << (p.model == RecurrenceParams::Model::Cubic ? "cubic" : "quadratic") << "(" << p.a << "," << p.b << ","
     << p.c;
  if (p.model == RecurrenceParams::Model::Cubic) os << "," << p.d;
  os << ")";
  return os.str();
}

// --- evaluation --------------------------------------------------------------

BigInt eval_S(unsigned long n, unsigned A, unsigned B, unsigned C) {
  BigInt total(0);
  for (unsigned long k = 0; k <= n; ++k) {
    BigInt term(1);
    if (!mul_pow(term, binom(n, static_cast<std::int64_t>(k)), A)) continue;
    if (!mul_pow(term, binom(n + k, static_cast<std::int64_t>(k)), B)) continue;
    if (!mul_pow(term, binom(2 * k, static_cast<std::int64_t>(n)), C)) continue;
    total += term;
  }
  return total;
}

BigInt eval_T(unsigned long n, unsigned A, unsigned B, unsigned C, unsigned D, unsigned E) {
  if (n == 0) return BigInt(1);
  BigInt total(0);
  auto ln = static_cast<std::int64_t>(n);
  for (unsigned long k = 0; 3 * k <= n; ++k) {
    BigInt factor(1);
    if (!mul_pow(factor, binom(n, static_cast<std::int64_t>(k)), A)) continue;
    if (!mul_pow(factor, binom(2 * k, static_cast<std::int64_t>(k)), B)) continue;
    if (!mul_pow(factor, binom(2 * (n - k), static_cast<std::int64_t>(n - k)), C)) continue;
    auto lk = static_cast<std::int64_t>(k);
    BigInt lo(1), hi(1);
    if (D > 0) lo = pow_int(binom_or_zero(2 * ln - 3 * lk - 1, ln), D);
    if (E > 0) hi = pow_int(binom_or_zero(2 * ln - 3 * lk, ln), E);
    total += parity_sign(k) * factor * (lo + hi);
  }
  return total;
}

BigInt eval_U(unsigned long n, unsigned eps, unsigned a, unsigned b) {
  BigInt total(0);
  for (unsigned long k = 0; k <= n; ++k) {
    BigInt term(1);
    if (!mul_pow(term, binom(n, static_cast<std::int64_t>(k)), a)) continue;
    if (!mul_pow(term, binom(2 * n, static_cast<std::int64_t>(k)), b)) continue;
    if (eps && k % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

namespace {

// Z(n) = sum_k (-1)^k binom(n,k)^3 [binom(4n-5k-1,3n) + binom(4n-5k,3n)],
// all binomials combinatorial.
BigInt eval_Z(unsigned long n) {
  if (n == 0) return BigInt(1);
  BigInt total(0);
  auto ln = static_cast<std::int64_t>(n);
  for (unsigned long k = 0; k <= n; ++k) {
    auto lk = static_cast<std::int64_t>(k);
    BigInt bracket = binom_or_zero(4 * ln - 5 * lk - 1, 3 * ln) + binom_or_zero(4 * ln - 5 * lk, 3 * ln);
    if (sgn(bracket) == 0) continue;
    total += parity_sign(k) * pow_int(binom(n, lk), 3) * bracket;
  }
  return total;
}

// sum_{3k<=n} (-1)^k 3^{n-3k} binom(n,3k) [binom(n+k,n) if with_extra] (3k)!/k!^3
BigInt eval_three_step(unsigned long n, bool with_extra) {
  BigInt total(0);
  for (unsigned long k = 0; 3 * k <= n; ++k) {
    BigInt term = pow3(n - 3 * k) * binom(n, static_cast<std::int64_t>(3 * k)) * trinomial_central(k);
    if (with_extra) term *= binom(n + k, static_cast<std::int64_t>(n));
    total += parity_sign(k) * term;
  }
  return total;
}

BigInt eval_zagier_c(unsigned long n) {
  BigInt total(0);
  for (unsigned long k = 0; k <= n; ++k) {
    total += pow_int(binom(n, static_cast<std::int64_t>(k)), 2) * binom(2 * k, static_cast<std::int64_t>(k));
  }
  return total;
}

BigInt eval_zagier_e(unsigned long n) {
  BigInt total(0);
  for (unsigned long k = 0; k <= n; ++k) {
    total += binom(n, static_cast<std::int64_t>(k)) * binom(2 * k, static_cast<std::int64_t>(k)) *
             binom(2 * (n - k), static_cast<std::int64_t>(n - k));
  }
  return total;
}

BigInt eval_zagier_f(unsigned long n) {
  BigInt total(0);
  for (unsigned long k = 0; k <= n; ++k) {
    BigInt inner(0);
    for (unsigned long l = 0; l <= k; ++l) {
      inner += pow_int(binom(k, static_cast<std::int64_t>(l)), 3);
    }
    total += parity_sign(k) * pow8(n - k) * binom(n, static_cast<std::int64_t>(k)) * inner;
  }
  return total;
}

BigInt eval_avsz_alpha(unsigned long n) {
  BigInt total(0);
  for (unsigned long k = 0; k <= n; ++k) {
    total += pow_int(binom(n, static_cast<std::int64_t>(k)), 2) * binom(2 * k, static_cast<std::int64_t>(k)) *
             binom(2 * (n - k), static_cast<std::int64_t>(n - k));
  }
  return total;
}

BigInt eval_avsz_zeta(unsigned long n) {
  BigInt total(0);
  for (unsigned long k = 0; k <= n; ++k) {
    BigInt outer = pow_int(binom(n, static_cast<std::int64_t>(k)), 2);
    BigInt inner(0);
    // binom(k,l) kills l > k; binom(k+l,n) kills k+l < n
    for (unsigned long l = (k >= n ? 0 : n - k); l <= k; ++l) {
      inner += binom(n, static_cast<std::int64_t>(l)) * binom(k, static_cast<std::int64_t>(l)) *
               binom(k + l, static_cast<std::int64_t>(n));
    }
    total += outer * inner;
  }
  return total;
}

}  // namespace

BigInt eval_catalog(Catalog id, unsigned long n) {
  switch (id) {
    case Catalog::Apery:
      return eval_S(n, 2, 2, 0);
    case Catalog::ZagierA:
      return eval_S(n, 3, 0, 0);
    case Catalog::ZagierB:
      return eval_three_step(n, false);
    case Catalog::ZagierC:
      return eval_zagier_c(n);
    case Catalog::ZagierD:
      return eval_S(n, 2, 1, 0);
    case Catalog::ZagierE:
      return eval_zagier_e(n);
    case Catalog::ZagierF:
      return eval_zagier_f(n);
    case Catalog::AVSZDelta:
      return eval_three_step(n, true);
    case Catalog::AVSZEta:
      return eval_Z(n);
    case Catalog::AVSZAlpha:
      return eval_avsz_alpha(n);
    case Catalog::AVSZEpsilon:
      return eval_S(n, 2, 0, 2);
    case Catalog::AVSZZeta:
      return eval_avsz_zeta(n);
    case Catalog::S10:
      return eval_S(n, 4, 0, 0);
    case Catalog::S7:
      return eval_S(n, 2, 1, 1);
    case Catalog::S18:
      return eval_T(n, 1, 1, 1, 1, 1);
  }
  throw std::logic_error("eval_catalog: unknown id");
}

BigInt eval_sequence(const SequenceId& id, unsigned long n) {
  struct Visitor {
    unsigned long n;
    BigInt operator()(Catalog c) const { return eval_catalog(c, n); }
    BigInt operator()(const SFamily& s) const { return eval_S(n, s.A, s.B, s.C); }
    BigInt operator()(const TFamily& t) const { return eval_T(n, t.A, t.B, t.C, t.D, t.E); }
    BigInt operator()(const UFamily& u) const { return eval_U(n, u.eps, u.a, u.b); }
  };
  return std::visit(Visitor{n}, id);
}

std::vector<BigRat> recur_eval(const RecurrenceParams& params, unsigned long n_max) {
  std::vector<BigRat> out;
  out.reserve(n_max + 1);
  BigRat prev(0);  // s(-1)
  BigRat cur(1);   // s(0)
  out.push_back(cur);
  const BigInt A(params.a), B(params.b), C(params.c), D(params.d);
  for (unsigned long n = 0; n < n_max; ++n) {
    const BigInt nz(n);
    BigRat num;
    BigInt den;
    if (params.model == RecurrenceParams::Model::Cubic) {
      BigInt lead = (2 * nz + 1) * (A * nz * nz + A * nz + B);
      BigInt trail = nz * (C * nz * nz + D);
      num = BigRat(lead) * cur - BigRat(trail) * prev;
      den = pow_int(nz + 1, 3);
    } else {
      BigInt lead = A * nz * nz + A * nz + B;
      BigInt trail = C * nz * nz;
      num = BigRat(lead) * cur - BigRat(trail) * prev;
      den = pow_int(nz + 1, 2);
    }
    BigRat next = num / BigRat(den);
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

CrosscheckReport crosscheck(Catalog id, unsigned long n_max) {
  CrosscheckReport report{id, n_max, std::nullopt};
  auto rec = recur_eval(catalog_entry(id).recurrence, n_max);
  for (unsigned long n = 0; n <= n_max; ++n) {
    if (BigRat(eval_catalog(id, n)) != rec[n]) {
      report.first_mismatch = n;
      break;
    }
  }
  return report;
}

// --- cache -------------------------------------------------------------------

SequenceCache::SequenceCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path SequenceCache::file_for(const SequenceId& id) const {
  std::string name = to_string(id);
  for (char& c : name) {
    if (c == ':' || c == ',') c = '_';
  }
  return dir_ / (name + ".tsv");
}

SequenceCache::PerSequence& SequenceCache::slot(const SequenceId& id) {
  auto& s = slots_[to_string(id)];
  if (!s.loaded) {
    s.loaded = true;
    std::ifstream in(file_for(id));
    std::string line;
    while (std::getline(in, line)) {
      auto tab = line.find('\t');
      if (tab == std::string::npos) continue;
      try {
        unsigned long n = std::stoul(line.substr(0, tab));
        BigInt v(line.substr(tab + 1), 10);
        s.values.emplace(n, std::move(v));
      } catch (const std::exception&) {
        // tolerate damaged lines: the cache is advisory
      }
    }
  }
  return s;
}

std::optional<BigInt> SequenceCache::lookup(const SequenceId& id, unsigned long n) {
  auto& s = slot(id);
  auto it = s.values.find(n);
  if (it == s.values.end()) return std::nullopt;
  return it->second;
}

void SequenceCache::store(const SequenceId& id, unsigned long n, const BigInt& value) {
  auto& s = slot(id);
  auto [it, inserted] = s.values.emplace(n, value);
  if (inserted) s.dirty = true;
}

void SequenceCache::flush() {
  for (auto& [name, s] : slots_) {
    if (!s.dirty) continue;
    std::filesystem::path target = file_for(parse_sequence(name));
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      for (const auto& [n, v] : s.values) {
        out << n << '\t' << v.get_str() << '\n';
      }
    }
    std::filesystem::rename(tmp, target);
    s.dirty = false;
  }
}

BigInt eval_sequence_cached(const SequenceId& id, unsigned long n, SequenceCache* cache) {
  if (cache) {
    if (auto hit = cache->lookup(id, n)) return *hit;
  }
  BigInt v = eval_sequence(id, n);
  if (cache) cache->store(id, n, v);
  return v;
}

}  // namespace sporadic
