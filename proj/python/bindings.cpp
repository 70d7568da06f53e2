// pybind11 surface over the core operations: invariants, specializations,
// a thin view of the q-symbol/coefficient layers, and the verification
// suites. Big-integer coefficients cross the boundary as decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistknot/coefficients.hpp"
#include "twistknot/invariants.hpp"
#include "twistknot/kauffman.hpp"
#include "twistknot/laurent.hpp"
#include "twistknot/qsymbols.hpp"
#include "twistknot/verify.hpp"

namespace py = pybind11;
using namespace twistknot;

namespace {

py::list poly2_terms(const LaurentPoly2& p) {
  py::list out;
  for (const auto& [e, c] : p.terms())
    out.append(py::make_tuple(e.a, e.q, to_decimal(c)));
  return out;
}

py::list poly1_terms(const LaurentPoly1& p) {
  py::list out;
  for (const auto& [e, c] : p.terms()) out.append(py::make_tuple(e, to_decimal(c)));
  return out;
}

py::dict report_dict(const verify::IdentityReport& r) {
  py::dict d;
  d["name"] = r.suite;
  d["range"] = r.range;
  d["checked"] = r.checked;
  d["passed"] = r.passed;
  d["millis"] = r.millis;
  if (!r.passed) d["counterexample"] = r.counterexample;
  return d;
}

verify::SuiteRanges make_ranges(int max_n, int max_p, int max_m) {
  verify::SuiteRanges r;
  r.max_n = max_n;
  r.max_p = max_p;
  r.max_m = max_m;
  return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact colored HOMFLY-PT polynomials of twist knots";

  py::register_exception<NotDivisible>(m, "NotDivisibleError");
  py::register_exception<ZeroFactor>(m, "ZeroFactorError");
  py::register_exception<UnknownSuite>(m, "UnknownSuiteError");
  py::register_exception<NoConventionMatches>(m, "NoConventionMatchesError");

  py::class_<LaurentPoly2>(m, "Poly2",
                           "Bivariate Laurent polynomial in (a, q)")
      .def(py::init<>())
      .def_static("parse", &LaurentPoly2::parse)
      .def("__str__", &LaurentPoly2::str)
      .def("__repr__",
           [](const LaurentPoly2& p) { return "Poly2('" + p.str() + "')"; })
      .def("__eq__",
           [](const LaurentPoly2& x, const LaurentPoly2& y) { return x == y; })
      .def("__len__", &LaurentPoly2::term_count)
      .def("terms", &poly2_terms,
           "list of (a_exponent, q_exponent, coefficient_string)")
      .def("mirrored", &LaurentPoly2::mirrored)
      .def("substitute_a", &LaurentPoly2::substitute_a, py::arg("N"),
           "replace a by q^N")
      .def("is_zero", &LaurentPoly2::is_zero);

  py::class_<LaurentPoly1>(m, "Poly1", "Laurent polynomial in one variable")
      .def("__str__", [](const LaurentPoly1& p) { return p.str("q"); })
      .def("str", &LaurentPoly1::str, py::arg("var") = "q")
      .def("__eq__",
           [](const LaurentPoly1& x, const LaurentPoly1& y) { return x == y; })
      .def("terms", &poly1_terms)
      .def("is_zero", &LaurentPoly1::is_zero);

  py::class_<QRational>(m, "QRat",
                        "Laurent polynomial over a factored denominator")
      .def("__str__", &QRational::str)
      .def("reduced", &QRational::reduced)
      .def("is_zero", &QRational::is_zero)
      .def("__eq__",
           [](const QRational& x, const QRational& y) { return rat_eq(x, y); });

  // invariants
  m.def("colored_homfly_twist", &inv::colored_homfly_twist, py::arg("n"),
        py::arg("p"), "n-colored HOMFLY-PT polynomial of the twist knot K_p");
  m.def("colored_homfly_trefoil", &inv::colored_homfly_trefoil, py::arg("n"));
  m.def("colored_homfly_fig8", &inv::colored_homfly_fig8, py::arg("n"));
  m.def("colored_jones", &inv::colored_jones, py::arg("n"), py::arg("p"),
        py::arg("N") = 2, "a = q^N specialization of the twist invariant");

  // q-symbols and coefficient families (thin view)
  m.def("qbinomial", [](int n, int i) { return qsym::qbinomial_poly(n, i); },
        py::arg("n"), py::arg("i"));
  m.def("brace_fall", [](int n, int i) { return qsym::brace_fall(n, i); },
        py::arg("n"), py::arg("i"));
  m.def("brace_a_fall", [](int n, int i) { return qsym::brace_a_fall(n, i); },
        py::arg("n"), py::arg("i"));
  m.def("sigma", &coeff::sigma, py::arg("n"), py::arg("i"));
  m.def("tau", &coeff::tau, py::arg("n"), py::arg("i"));
  m.def("theta", &coeff::theta, py::arg("n"), py::arg("i"));
  m.def("t_p", &coeff::t_p, py::arg("i"), py::arg("p"));
  m.def("s_p", &coeff::s_p, py::arg("i"), py::arg("p"));

  // Kauffman oracle
  m.def("kauffman_jones", [](const std::string& knot) {
    oracle::PlanarDiagram d;
    if (knot == "unknot")
      d = oracle::PlanarDiagram::unknot();
    else if (knot == "trefoil")
      d = oracle::PlanarDiagram::trefoil();
    else if (knot == "figure_eight")
      d = oracle::PlanarDiagram::figure_eight();
    else
      throw py::value_error("unknown knot: " + knot);
    return oracle::jones_str(oracle::jones_polynomial(d));
  });
  m.def("resolve_jones_convention", [] {
    const auto r = oracle::resolve_jones_convention();
    py::dict d;
    d["resolved"] = r.resolved;
    d["convention"] = r.convention;
    d["detail"] = r.detail;
    return d;
  });

  // verification suites
  m.def("suite_names", &verify::suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, int max_n, int max_p, int max_m) {
        return report_dict(verify::run_suite(name, make_ranges(max_n, max_p, max_m)));
      },
      py::arg("name"), py::arg("max_n") = 0, py::arg("max_p") = 0,
      py::arg("max_m") = 0);
  m.def(
      "run_all_suites",
      [](int max_n, int max_p, int max_m) {
        py::list out;
        for (const auto& r : verify::run_all(make_ranges(max_n, max_p, max_m)))
          out.append(report_dict(r));
        return out;
      },
      py::arg("max_n") = 0, py::arg("max_p") = 0, py::arg("max_m") = 0);
}
