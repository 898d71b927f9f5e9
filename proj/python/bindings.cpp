#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tornheim/alpha_calculus.hpp"
#include "tornheim/bernoulli.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/quadrature.hpp"
#include "tornheim/tornheim_eval.hpp"
#include "tornheim/verify.hpp"

namespace py = pybind11;
using namespace tornheim;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.to_string());
}

// [(Fraction, pi_power, zeta_prime_arg or None), ...]
py::list closed_terms(const ClosedForm& c) {
  py::list out;
  for (const auto& t : c.terms()) {
    out.append(py::make_tuple(fraction(t.coeff), t.pi_power,
                              t.zeta_prime_arg ? py::object(py::int_(*t.zeta_prime_arg)) : py::object(py::none())));
  }
  return out;
}

SummationSettings summation(int cutoff, int tail_terms, double tol) {
  SummationSettings s;
  s.cutoff = cutoff;
  s.tail_terms = tail_terms;
  s.target_tol = tol;
  s.max_cutoff = std::max(s.max_cutoff, 4 * cutoff);
  return s;
}

}  // namespace

PYBIND11_MODULE(_tornheim, m) {
  m.doc() = "Tornheim double zeta values, exact closed forms and identity checks.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

  py::class_<ClosedForm>(m, "ClosedForm")
      .def_property_readonly("terms", &closed_terms)
      .def("value", [](const ClosedForm& c) { return closedform_eval(c); })
      .def("to_json", [](const ClosedForm& c) { return to_json(c).dump(); })
      .def_static("from_json", [](const std::string& s) { return closed_form_from_json(nlohmann::json::parse(s)); })
      .def("__eq__", [](const ClosedForm& a, const ClosedForm& b) { return a == b; })
      .def("__str__", &ClosedForm::to_string)
      .def("__repr__", [](const ClosedForm& c) { return "ClosedForm(" + c.to_string() + ")"; });

  m.def(
      "tornheim", [](Complex s1, Complex s2, Complex s3, int cutoff, int tail_terms, double tol) {
        return tornheim_numeric({s1, s2, s3}, summation(cutoff, tail_terms, tol));
      },
      py::arg("s1"), py::arg("s2"), py::arg("s3"), py::arg("cutoff") = 64, py::arg("tail_terms") = 8,
      py::arg("tol") = 1e-12);
  m.def(
      "double_zeta", [](Complex s1, Complex s2, int cutoff, int tail_terms, double tol) {
        return double_zeta(s1, s2, summation(cutoff, tail_terms, tol));
      },
      py::arg("s1"), py::arg("s2"), py::arg("cutoff") = 64, py::arg("tail_terms") = 8, py::arg("tol") = 1e-12);
  m.def("tornheim_closed", &tornheim_closed, py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("hurwitz_zeta", [](Complex s, double alpha, int r) { return hurwitz_zeta(s, alpha, r); }, py::arg("s"),
        py::arg("alpha"), py::arg("r") = 0);
  m.def("riemann_zeta", [](Complex s, int r) { return riemann_zeta(s, r); }, py::arg("s"), py::arg("r") = 0);
  m.def("gamma", [](Complex z) { return tornheim::gamma(z); }, py::arg("z"));

  m.def("bernoulli", [](unsigned n) { return fraction(bernoulli_number(n)); }, py::arg("n"));
  m.def(
      "bernoulli_poly",
      [](unsigned n) {
        py::list out;
        const Polynomial p = bernoulli_polynomial(n);
        for (const auto& c : p.coefficients()) out.append(fraction(c));
        return out;
      },
      py::arg("n"));

  m.def("diagonal_even_closed", &diagonal_even_closed, py::arg("n"));
  m.def("diagonal_odd_closed", &diagonal_odd_closed, py::arg("n"));
  m.def("double_zeta_odd_closed", &double_zeta_odd_closed, py::arg("n1"), py::arg("n2"));
  m.def("alternating_combo_odd", &alternating_combo_odd, py::arg("n1"), py::arg("n2"), py::arg("n3"));
  m.def("integrate_zeta_product", &integrate_zeta_product, py::arg("n1"), py::arg("n2"), py::arg("n3"),
        py::arg("r") = 0);
  m.def(
      "hwz_reduce",
      [](int a, int b, int c) {
        py::list out;
        for (const auto& t : hwz_reduce(a, b, c)) {
          out.append(py::make_tuple(fraction(t.coeff), py::make_tuple(t.args[0], t.args[1], t.args[2])));
        }
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "alpha_integral",
      [](const std::vector<std::tuple<Complex, int, bool>>& factors) {
        IntegrandSpec spec;
        for (const auto& [s, r, refl] : factors) spec.factors.push_back({s, r, refl});
        return alpha_product_integral(spec).value;
      },
      py::arg("factors"), "factors: [(s, r, reflected), ...]");

  m.def("suite_ids", &suite_ids);
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, std::optional<double> tol) {
        VerifySettings st;
        st.seed = seed;
        st.tol = tol;
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, st);
        }
        return to_json(r).dump();
      },
      py::arg("suite") = "all", py::arg("seed") = 0, py::arg("tol") = py::none(),
      "Runs a suite and returns the report as a JSON string.");
}
