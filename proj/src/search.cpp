#include "sporadic/search.hpp"

#include <cstdlib>
#include <stdexcept>

#include "sporadic/parallel.hpp"

namespace sporadic {

namespace {

using I128 = __int128;

constexpr I128 kValueCeiling = static_cast<I128>(1) << 62;

BigInt to_bigint(I128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(u);
  return neg ? BigInt(-r) : r;
}

I128 abs128(I128 v) { return v < 0 ? -v : v; }

// Shared state of one integrality scan. The fast path carries the last two
// values in 128-bit words; once they or the coefficients threaten the
// headroom, the scan continues on big integers from the same state.
struct ScanState {
  bool big = false;
  I128 prev = 0, cur = 1;
  BigInt bprev, bcur;

  void promote() {
    bprev = to_bigint(prev);
    bcur = to_bigint(cur);
    big = true;
  }
};

IntegralityScan scan_integrality_impl(const RecurrenceParams& params, unsigned long n_max) {
  const bool cubic = params.model == RecurrenceParams::Model::Cubic;
  ScanState st;
  const I128 A = params.a, B = params.b, C = params.c, D = params.d;
  for (unsigned long n = 0; n < n_max; ++n) {
    const I128 nn = static_cast<I128>(n);
    I128 lead, trail, den;
    if (cubic) {
      lead = (2 * nn + 1) * (A * nn * nn + A * nn + B);
      trail = nn * (C * nn * nn + D);
      den = (nn + 1) * (nn + 1) * (nn + 1);
    } else {
      lead = A * nn * nn + A * nn + B;
      trail = C * nn * nn;
      den = (nn + 1) * (nn + 1);
    }
    if (!st.big &&
        (abs128(lead) >= kValueCeiling || abs128(trail) >= kValueCeiling ||
         abs128(st.cur) >= kValueCeiling || abs128(st.prev) >= kValueCeiling)) {
      st.promote();
    }
    if (st.big) {
      BigInt num = to_bigint(lead) * st.bcur - to_bigint(trail) * st.bprev;
      BigInt denz = to_bigint(den);
      if (!mpz_divisible_p(num.get_mpz_t(), denz.get_mpz_t())) {
        return {n, n + 1};
      }
      BigInt next;
      mpz_divexact(next.get_mpz_t(), num.get_mpz_t(), denz.get_mpz_t());
      st.bprev = std::move(st.bcur);
      st.bcur = std::move(next);
    } else {
      // |lead|,|trail| < 2^62 and |cur|,|prev| < 2^62, so the products stay
      // below 2^124 and the difference cannot overflow a signed 128-bit word
      I128 num = lead * st.cur - trail * st.prev;
      if (num % den != 0) {
        return {n, n + 1};
      }
      st.prev = st.cur;
      st.cur = num / den;
    }
  }
  return {n_max, std::nullopt};
}

}  // namespace

IntegralityScan scan_integrality(const RecurrenceParams& params, unsigned long n_max) {
  return scan_integrality_impl(params, n_max);
}

std::optional<std::string> known_label(const RecurrenceParams& params) {
  for (const auto& entry : catalog()) {
    if (params == entry.recurrence) return entry.name;
    if (params == entry.tabulated && !(entry.tabulated == entry.recurrence)) {
      return entry.name + " (as tabulated)";
    }
  }
  return std::nullopt;
}

namespace {

void validate_search_args(const std::vector<ParamRange>& ranges, unsigned long n_max) {
  for (const auto& r : ranges) {
    if (r.empty()) throw std::invalid_argument("search: empty parameter range");
    if (std::llabs(r.lo) > 1000000000 || std::llabs(r.hi) > 1000000000) {
      throw std::invalid_argument("search: parameter range too wide");
    }
  }
  if (n_max < 10) throw std::invalid_argument("search: n_max must be at least 10");
}

std::vector<SearchHit> run_search(RecurrenceParams::Model model, ParamRange a, ParamRange b, ParamRange c,
                                  ParamRange d, unsigned long n_max, bool deep, unsigned jobs) {
  const bool cubic = model == RecurrenceParams::Model::Cubic;
  // one task per a-value keeps per-thread batches large and the merge ordered
  const unsigned long tasks = a.size();
  std::vector<std::vector<SearchHit>> per_task(tasks);
  parallel_for(tasks, jobs, [&](std::size_t ti) {
    RecurrenceParams params;
    params.model = model;
    params.a = a.lo + static_cast<long>(ti);
    for (long vb = b.lo; vb <= b.hi; ++vb) {
      params.b = vb;
      for (long vc = c.lo; vc <= c.hi; ++vc) {
        params.c = vc;
        for (long vd = (cubic ? d.lo : 0); vd <= (cubic ? d.hi : 0); ++vd) {
          params.d = cubic ? vd : 0;
          if (!scan_integrality(params, n_max).integral()) continue;
          unsigned long depth = n_max;
          if (deep) {
            if (!scan_integrality(params, 2 * n_max).integral()) continue;
            depth = 2 * n_max;
          }
          per_task[ti].push_back({params, depth, known_label(params)});
        }
      }
    }
  });
  std::vector<SearchHit> hits;
  for (auto& batch : per_task) {
    hits.insert(hits.end(), batch.begin(), batch.end());
  }
  return hits;
}

}  // namespace

std::vector<SearchHit> search_cubic(ParamRange a, ParamRange b, ParamRange c, ParamRange d,
                                    unsigned long n_max, bool deep, unsigned jobs) {
  validate_search_args({a, b, c, d}, n_max);
  return run_search(RecurrenceParams::Model::Cubic, a, b, c, d, n_max, deep, jobs);
}

std::vector<SearchHit> search_quadratic(ParamRange a, ParamRange b, ParamRange c, unsigned long n_max,
                                        bool deep, unsigned jobs) {
  validate_search_args({a, b, c}, n_max);
  return run_search(RecurrenceParams::Model::Quadratic, a, b, c, {}, n_max, deep, jobs);
}

}  // namespace sporadic
