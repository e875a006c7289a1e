// Python bindings for the sporadic core: exact sequence evaluation, two-term
// congruence checks, the eta-product and van Hamme verifications, and the
// recurrence-integrality searches. Big integers cross the boundary as Python
// ints, exact rationals as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "sporadic/analytic.hpp"
#include "sporadic/binomial.hpp"
#include "sporadic/congruence.hpp"
#include "sporadic/exact.hpp"
#include "sporadic/search.hpp"
#include "sporadic/sequences.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>(), 10);
    return true;
  }

  static handle cast(const mpz_class& src, return_value_policy, handle) {
    return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    // Anything numerator/denominator-shaped: Fraction, and int since 3.8.
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    mpz_class num(py::str(src.attr("numerator")).cast<std::string>(), 10);
    mpz_class den(py::str(src.attr("denominator")).cast<std::string>(), 10);
    if (den == 0) return false;
    value = mpq_class(num, den);
    value.canonicalize();
    return true;
  }

  static handle cast(const mpq_class& src, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::reinterpret_steal<py::object>(
        PyLong_FromString(src.get_num().get_str().c_str(), nullptr, 10));
    py::object den = py::reinterpret_steal<py::object>(
        PyLong_FromString(src.get_den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using namespace sporadic;

py::object valuation_to_py(const std::optional<long>& v) {
  if (!v) return py::none();
  return py::int_(*v);
}

py::dict check_to_dict(const CongruenceCheck& check) {
  py::dict d;
  d["sequence"] = to_string(check.sequence);
  d["p"] = check.p;
  d["m"] = check.m;
  d["r"] = check.r;
  d["claimed_exponent"] = check.claimed_exponent;
  d["observed_valuation"] = valuation_to_py(check.observed_valuation);
  d["pass"] = check.pass;
  d["conjectural"] = check.conjectural;
  d["asserted"] = check.asserted;
  return d;
}

py::dict hit_to_dict(const SearchHit& hit) {
  py::dict d;
  d["model"] = hit.params.model == RecurrenceParams::Model::Cubic ? "cubic" : "quadratic";
  d["a"] = hit.params.a;
  d["b"] = hit.params.b;
  d["c"] = hit.params.c;
  if (hit.params.model == RecurrenceParams::Model::Cubic) d["d"] = hit.params.d;
  d["n_checked"] = hit.n_checked;
  d["label"] = hit.known_label ? py::object(py::str(*hit.known_label)) : py::object(py::none());
  return d;
}

ParamRange range_from_pair(std::pair<long, long> bounds, const char* what) {
  if (bounds.second < bounds.first)
    throw std::invalid_argument(std::string("empty range for ") + what);
  return ParamRange{bounds.first, bounds.second};
}

}  // namespace

PYBIND11_MODULE(_sporadic, m) {
  m.doc() = "exact arithmetic for sporadic sequences and their congruences";
#ifdef SPORADIC_VERSION
  m.attr("__version__") = SPORADIC_VERSION;
#endif

  m.def("sequence_names", [] {
    std::vector<std::string> names;
    for (const auto& entry : catalog()) names.push_back(entry.name);
    return names;
  });

  m.def(
      "eval_sequence",
      [](const std::string& name, unsigned long n) { return eval_sequence(parse_sequence(name), n); },
      py::arg("name"), py::arg("n"),
      "Exact value of a cataloged sequence (or S:/T:/U: family) at n.");

  m.def(
      "eval_range",
      [](const std::string& name, unsigned long lo, unsigned long hi) {
        SequenceId id = parse_sequence(name);
        std::vector<BigInt> values;
        for (unsigned long n = lo; n <= hi; ++n) values.push_back(eval_sequence(id, n));
        return values;
      },
      py::arg("name"), py::arg("lo"), py::arg("hi"));

  m.def(
      "crosscheck",
      [](const std::string& name, unsigned long n_max) {
        Catalog id = std::get<Catalog>(parse_sequence(name));
        auto report = crosscheck(id, n_max);
        py::dict d;
        d["sequence"] = to_string(report.id);
        d["n_checked"] = report.n_checked;
        d["agree"] = report.agree();
        d["first_mismatch"] =
            report.first_mismatch ? py::object(py::int_(*report.first_mismatch)) : py::object(py::none());
        return d;
      },
      py::arg("name"), py::arg("n_max"),
      "Compare the binomial sum against its recurrence for n <= n_max.");

  m.def(
      "vp", [](const BigRat& x, std::uint64_t p) { return vp(x, p); }, py::arg("x"), py::arg("p"),
      "p-adic valuation of a nonzero rational.");

  m.def(
      "binom", [](std::uint64_t n, std::int64_t k) { return binom(n, k); }, py::arg("n"), py::arg("k"));

  m.def(
      "binom_gen", [](const BigRat& x, unsigned long k) { return binom_gen(x, k); }, py::arg("x"),
      py::arg("k"), "Generalized binomial coefficient with rational upper argument.");

  m.def(
      "check_two_term",
      [](const std::string& name, std::uint64_t p, unsigned m, unsigned r, long claimed) {
        return check_to_dict(check_two_term(parse_sequence(name), p, m, r, claimed));
      },
      py::arg("name"), py::arg("p"), py::arg("m"), py::arg("r"), py::arg("claimed_exponent"),
      "v_p(A(m p^r) - A(m p^{r-1})) against the claimed exponent.");

  m.def(
      "eta_coefficients",
      [](unsigned long limit) {
        auto expansion = eta_q_expansion(limit);
        return expansion.coefficients;
      },
      py::arg("limit"), "Coefficients a(0..limit) of the weight-4 eta-product expansion.");

  m.def(
      "beukers",
      [](std::uint64_t p) {
        auto expansion = eta_q_expansion(std::max<std::uint64_t>(p, 11));
        auto check = beukers_check(p, expansion);
        py::dict d;
        d["p"] = p;
        d["a_p"] = expansion.at(p);
        d["required"] = check.required;
        d["observed_valuation"] = valuation_to_py(check.observed);
        d["pass"] = check.pass;
        return d;
      },
      py::arg("p"), "v_p(A((p-1)/2) - a(p)) >= 2 for odd p.");

  m.def(
      "van_hamme",
      [](std::uint64_t p) {
        auto result = van_hamme_check(p);
        py::dict d;
        d["p"] = result.p;
        d["branch"] = result.gamma_branch ? "gamma" : "valuation";
        d["required"] = result.check.required;
        d["observed_valuation"] = valuation_to_py(result.check.observed);
        d["pass"] = result.check.pass;
        return d;
      },
      py::arg("p"));

  m.def(
      "van_hamme_sum", [](std::uint64_t p) { return van_hamme_sum(p); }, py::arg("p"),
      "The exact rational sum_{k<=(p-1)/2} (4k+1) binom(-1/2,k)^5.");

  m.def(
      "padic_gamma",
      [](const BigRat& x, std::uint64_t p, unsigned N) { return padic_gamma(x, p, N).value; },
      py::arg("x"), py::arg("p"), py::arg("N"), "Morita p-adic gamma of x modulo p^N.");

  m.def(
      "search_cubic",
      [](std::pair<long, long> a, std::pair<long, long> b, std::pair<long, long> c,
         std::pair<long, long> d, unsigned long n_max, bool deep, unsigned jobs) {
        auto hits = search_cubic(range_from_pair(a, "a"), range_from_pair(b, "b"),
                                 range_from_pair(c, "c"), range_from_pair(d, "d"), n_max, deep, jobs);
        py::list out;
        for (const auto& hit : hits) out.append(hit_to_dict(hit));
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("n_max") = 50,
      py::arg("deep") = false, py::arg("jobs") = 1);

  m.def(
      "search_quadratic",
      [](std::pair<long, long> a, std::pair<long, long> b, std::pair<long, long> c,
         unsigned long n_max, bool deep, unsigned jobs) {
        auto hits = search_quadratic(range_from_pair(a, "a"), range_from_pair(b, "b"),
                                     range_from_pair(c, "c"), n_max, deep, jobs);
        py::list out;
        for (const auto& hit : hits) out.append(hit_to_dict(hit));
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n_max") = 50, py::arg("deep") = false,
      py::arg("jobs") = 1);

  m.def(
      "lemma_suites",
      [](unsigned count, std::uint64_t seed) {
        auto instances = run_lemma_suites(count, seed);
        unsigned long failures = 0;
        for (const auto& instance : instances)
          if (!instance.check.pass) ++failures;
        py::dict d;
        d["instances"] = instances.size();
        d["failures"] = failures;
        return d;
      },
      py::arg("count") = 200, py::arg("seed") = 20260815,
      "Randomized lemma-predicate suites; returns instance and failure counts.");
}
