#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sporadic/sequences.hpp"

namespace sporadic {

// Inclusive integer interval.
struct ParamRange {
  long lo = 0;
  long hi = -1;

  bool empty() const { return lo > hi; }
  unsigned long size() const { return empty() ? 0 : static_cast<unsigned long>(hi - lo + 1); }
};

struct SearchHit {
  RecurrenceParams params;
  unsigned long n_checked = 0;
  std::optional<std::string> known_label;
};

// How far the recurrence stays integral: values s(1..integral_to) are
// integers; first_nonintegral is the first index whose value is not.
struct IntegralityScan {
  unsigned long integral_to = 0;
  std::optional<unsigned long> first_nonintegral;

  bool integral() const { return !first_nonintegral.has_value(); }
};

// Exact integrality scan of s(1..n_max) with early abort: a checked
// 128-bit fast path escalates to big integers before any overflow.
IntegralityScan scan_integrality(const RecurrenceParams& params, unsigned long n_max);

// Name for a tuple appearing in the catalog (the tabulated s18 signs are
// labeled distinctly from the tuple the binomial sum satisfies).
std::optional<std::string> known_label(const RecurrenceParams& params);

// All integral tuples of the (n+1)^3 model over the box, canonically
// ordered by (a,b,c,d). With deep = true every hit is re-verified to
// twice the depth before being reported.
std::vector<SearchHit> search_cubic(ParamRange a, ParamRange b, ParamRange c, ParamRange d,
                                    unsigned long n_max, bool deep = false, unsigned jobs = 1);

// Same for the (n+1)^2 model (no d parameter).
std::vector<SearchHit> search_quadratic(ParamRange a, ParamRange b, ParamRange c, unsigned long n_max,
                                        bool deep = false, unsigned jobs = 1);

}  // namespace sporadic
