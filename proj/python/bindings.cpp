#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidkit/braid_word.hpp"
#include "braidkit/cabling.hpp"
#include "braidkit/census.hpp"
#include "braidkit/criteria.hpp"
#include "braidkit/genus.hpp"
#include "braidkit/homfly.hpp"
#include "braidkit/invariants.hpp"
#include "braidkit/permutation.hpp"

namespace py = pybind11;
using namespace braidkit;

namespace {

// {(v, z): c} and {s: c}; s is t^{1/2} for Jones and Alexander
py::dict as_dict(const LaurentPoly2& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::make_tuple(e.v, e.z)] = c;
  return d;
}

py::dict as_dict(const LaurentPoly1& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = c;
  return d;
}

LaurentPoly2 from_dict(const py::dict& d) {
  std::vector<LaurentPoly2::Term> terms;
  for (auto [k, c] : d) {
    auto t = k.cast<std::pair<int, int>>();
    terms.push_back({Exp2{t.first, t.second}, c.cast<Coeff>()});
  }
  return LaurentPoly2::from_terms(std::move(terms));
}

BraidWord make_braid(const py::object& src, std::optional<int> strands) {
  if (py::isinstance<py::str>(src)) return parse_word(src.cast<std::string>(), strands);
  auto tokens = src.cast<std::vector<int>>();
  int n = 1;
  for (int t : tokens) n = std::max(n, std::abs(t) + 1);
  return BraidWord::from_tokens(strands.value_or(n), tokens);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  py::class_<BraidWord>(m, "Braid")
      .def(py::init(&make_braid), py::arg("word"), py::arg("strands") = py::none())
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("tokens", &BraidWord::tokens)
      .def("is_positive", &BraidWord::is_positive)
      .def("exponent_sum", [](const BraidWord& w) { return exponent_sum(w); })
      .def("components", [](const BraidWord& w) { return closure_components(w); })
      .def("inverse", &BraidWord::inverse)
      .def("__mul__", &BraidWord::operator*)
      .def("__len__", &BraidWord::length)
      .def("__eq__", [](const BraidWord& a, const BraidWord& b) { return a == b; })
      .def("__hash__", [](const BraidWord& w) { return WordHash{}(w); })
      .def("__str__", [](const BraidWord& w) { return format_word(w); })
      .def("__repr__", [](const BraidWord& w) { return "Braid('" + format_word(w, true) + "')"; });

  m.def("homfly", [](const BraidWord& w) { return as_dict(homfly(w)); });
  m.def("homfly_text", [](const BraidWord& w) { return to_string(homfly(w)); });
  m.def("jones", [](const BraidWord& w) { return as_dict(jones(w)); });
  m.def("alexander", [](const BraidWord& w) { return as_dict(alexander(w)); });
  m.def("degree_stats", [](const BraidWord& w) {
    auto s = degree_stats(homfly(w));
    py::dict d;
    d["min_deg_v"] = s.min_deg_v;
    d["max_deg_v"] = s.max_deg_v;
    d["span_v"] = s.span_v;
    d["min_deg_z"] = s.min_deg_z;
    d["max_deg_z"] = s.max_deg_z;
    return d;
  });

  m.def("mwf_bound", [](const py::dict& p) { return mwf_bound(from_dict(p)); });
  m.def("admissible_writhes",
        [](const py::dict& p, int n) { return admissible_writhes(from_dict(p), n).values(); });
  m.def(
      "criteria",
      [](const py::dict& p, std::optional<py::dict> cable, int cable_k) {
        CriteriaInput in;
        in.homfly = from_dict(p);
        if (cable) in.cable_homfly = from_dict(*cable);
        in.cable_k = cable_k;
        auto rep = criteria_report(in);
        py::list entries;
        for (const auto& e : rep.entries) entries.append(py::make_tuple(e.name, e.lower_bound));
        return py::make_tuple(rep.aggregate(), entries);
      },
      py::arg("homfly"), py::arg("cable") = py::none(), py::arg("cable_k") = 2);

  m.def("canonicalize", [](const BraidWord& w) { return canonicalize(w); });
  m.def("closure_verdict", [](const BraidWord& w) { return std::string(to_string(composite_or_disconnected_filter(w))); });
  m.def(
      "reduce",
      [](const BraidWord& w, std::size_t budget) {
        auto r = reduction_search(w, budget);
        return py::make_tuple(r.best_word, r.states_explored, r.budget_exhausted);
      },
      py::arg("word"), py::arg("budget") = 200000);
  m.def("minimality_certificate", &minimality_certificate);
  m.def(
      "d_n",
      [](int n, int c_max, int jobs) {
        auto r = d_n_pipeline(n, c_max, jobs);
        return py::make_tuple(r.d, r.witness);
      },
      py::arg("n"), py::arg("c_max"), py::arg("jobs") = 1);

  m.def("positive_genus", &positive_genus);
  m.def("morton_check", [](const BraidWord& w) {
    auto r = morton_conjecture_check(w);
    return py::make_tuple(std::string(to_string(r.verdict)), r.min_deg_v, r.lower, r.upper);
  });

  m.def("two_cable", &two_cable, py::arg("word"), py::arg("writhe"));
  m.def("cable", [](const BraidWord& w, const BraidWord& g) { return cable_word(w, CablePattern{g}); });
}
