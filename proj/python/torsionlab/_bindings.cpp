#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torsionlab/certify.hpp"
#include "torsionlab/chebyshev.hpp"
#include "torsionlab/scan.hpp"
#include "torsionlab/torsion.hpp"

#include <sstream>

namespace py = pybind11;
using namespace torsionlab;

namespace {

py::object big_to_int(const BigInt& v) {
    const std::string s = v.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list poly_coeffs(const IntPolynomial& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(big_to_int(c));
    return out;
}

py::list laurent_coeffs(const LaurentPolynomial& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(c);
    return out;
}

} // namespace

PYBIND11_MODULE(_torsionlab, m) {
    m.doc() = "Adjoint twisted Alexander polynomials of double twist knots J(k,2n) at "
              "parabolic SL2(C) representations";

    py::class_<DoubleTwistKnot>(m, "Knot")
        .def(py::init<int, int>(), py::arg("k"), py::arg("n"))
        .def_readonly("k", &DoubleTwistKnot::k)
        .def_readonly("n", &DoubleTwistKnot::n)
        .def_readonly("m", &DoubleTwistKnot::m)
        .def("odd", &DoubleTwistKnot::odd)
        .def("name", &DoubleTwistKnot::name)
        .def("__repr__", [](const DoubleTwistKnot& k) { return "<Knot " + k.name() + ">"; });

    m.def("parse_knot", &parse_knot_name, py::arg("name"),
          "Parse a knot name of the form J(k,2n), e.g. \"J(2,-2)\".");

    py::class_<KnotFacts>(m, "KnotFacts")
        .def_readonly("genus", &KnotFacts::genus)
        .def_readonly("fibered", &KnotFacts::fibered)
        .def_readonly("hyperbolic", &KnotFacts::hyperbolic);

    m.def(
        "classify", [](const DoubleTwistKnot& k) { return classify(k); }, py::arg("knot"),
        "Genus, fibering and hyperbolicity of the knot.");

    m.def(
        "cheb_poly", [](int l) { return poly_coeffs(cheb_poly(l)); }, py::arg("l"),
        "Coefficients of the Chebyshev polynomial S_l (constant term first).");
    m.def("cheb_eval", &cheb_eval, py::arg("l"), py::arg("v"));

    py::class_<RileyData>(m, "RileyData")
        .def_readonly("x_squared", &RileyData::x_squared)
        .def_property_readonly("z", [](const RileyData& d) { return poly_coeffs(d.z_poly); })
        .def_property_readonly("t", [](const RileyData& d) { return poly_coeffs(d.t_poly); })
        .def_property_readonly("riley", [](const RileyData& d) { return poly_coeffs(d.riley); });

    m.def(
        "build_riley",
        [](const DoubleTwistKnot& k, int x_squared) { return build_riley(k, x_squared); },
        py::arg("knot"), py::arg("x_squared") = 4,
        "Exact z, t and Riley polynomials in y at the given integer x^2.");

    py::class_<ParabolicRoot>(m, "ParabolicRoot")
        .def_readonly("y", &ParabolicRoot::y)
        .def_readonly("nonreal", &ParabolicRoot::nonreal)
        .def_readonly("nondegenerate", &ParabolicRoot::nondegenerate)
        .def_readonly("residual", &ParabolicRoot::residual)
        .def("__repr__", [](const ParabolicRoot& r) {
            std::ostringstream os;
            os << "<ParabolicRoot y=" << format_complex(r.y)
               << (r.nonreal ? " nonreal" : " real") << ">";
            return os.str();
        });

    m.def(
        "parabolic_roots",
        [](const DoubleTwistKnot& k) { return parabolic_roots(k).roots; }, py::arg("knot"),
        "All roots of the parabolic Riley polynomial R(2, y) with flags.");

    py::class_<TorsionReport>(m, "TorsionReport")
        .def_property_readonly("y", [](const TorsionReport& r) { return r.root.y; })
        .def_property_readonly("delta",
                               [](const TorsionReport& r) { return laurent_coeffs(r.delta); })
        .def_property_readonly("delta_lo", [](const TorsionReport& r) { return r.delta.lo(); })
        .def_readonly("degree_span", &TorsionReport::degree_span)
        .def_readonly("top_coeff", &TorsionReport::top_coeff)
        .def_readonly("bottom_coeff", &TorsionReport::bottom_coeff)
        .def_readonly("genus", &TorsionReport::genus)
        .def_readonly("monic", &TorsionReport::monic)
        .def_readonly("fibered_expected", &TorsionReport::fibered_expected)
        .def_readonly("degree_matches_genus", &TorsionReport::degree_matches_genus)
        .def_readonly("extremes_match", &TorsionReport::extremes_match)
        .def_readonly("t0_end_matched", &TorsionReport::t0_end_matched)
        .def_readonly("division_residual", &TorsionReport::division_residual)
        .def_readonly("withheld", &TorsionReport::verdicts_withheld)
        .def("ok", &TorsionReport::ok);

    m.def(
        "verify", [](const DoubleTwistKnot& k) { return verify_theorem(k); }, py::arg("knot"),
        "Per-root degree/genus and monic/fibered verdicts for a hyperbolic knot.");

    m.def(
        "adjoint_polynomial",
        [](const DoubleTwistKnot& k, Complex y) {
            const AdjointTap tap = adjoint_tap(k, Sl2Rep::parabolic(y));
            return py::make_tuple(tap.delta.lo(), laurent_coeffs(tap.delta), tap.residual);
        },
        py::arg("knot"), py::arg("y"),
        "Delta at the parabolic representation with tr(rho(ab^-1)) = y; returns "
        "(lowest exponent, coefficients, division residual).");

    py::class_<MonicityObstruction>(m, "MonicityObstruction")
        .def_property_readonly("q", [](const MonicityObstruction& o) { return big_to_int(o.q); })
        .def_property_readonly("P", [](const MonicityObstruction& o) { return poly_coeffs(o.P); })
        .def_readonly("riley_monic", &MonicityObstruction::riley_monic)
        .def_readonly("valid", &MonicityObstruction::valid)
        .def("to_json", [](const MonicityObstruction& o) { return obstruction_to_json(o); });

    m.def(
        "certify", [](const DoubleTwistKnot& k) { return monicity_obstruction(k); },
        py::arg("knot"),
        "Exact Eisenstein-type non-monicity certificate for a non-fibered knot.");
    m.def("obstruction_applicable", &obstruction_applicable, py::arg("knot"));

    m.def(
        "scan_json",
        [](int k_min, int k_max, int n_min, int n_max, int jobs) {
            ScanConfig config;
            config.k_min = k_min;
            config.k_max = k_max;
            config.n_min = n_min;
            config.n_max = n_max;
            config.jobs = jobs;
            const ScanResult result = run_scan(config);
            std::ostringstream os;
            write_scan_json(os, config, result);
            return os.str();
        },
        py::arg("k_min") = 2, py::arg("k_max") = 8, py::arg("n_min") = -4, py::arg("n_max") = 4,
        py::arg("jobs") = 1, "Grid verification results as a JSON string (schema_version 1).");

    py::register_exception<NonHyperbolicError>(m, "NonHyperbolicError", PyExc_ValueError);
    py::register_exception<TorsionError>(m, "TorsionError", PyExc_ArithmeticError);
}
