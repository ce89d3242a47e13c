#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circprime/bench.hpp"
#include "circprime/errors.hpp"
#include "circprime/spectral.hpp"
#include "circprime/spectrum.hpp"

namespace py = pybind11;
using namespace circprime;

namespace {

py::int_ to_py(const BigInt& v) {
    const std::string s = v.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list to_py(const FactorSet& f) {
    py::list out;
    for (const auto& poly : f.factors) {
        py::list coeffs;
        for (const auto& c : poly.coefficients()) coeffs.append(to_py(c));
        out.append(coeffs);
    }
    return out;
}

PrecisionPolicy policy(unsigned initial, unsigned max) { return PrecisionPolicy{initial, max}; }

}  // namespace

PYBIND11_MODULE(_circprime, m) {
    m.doc() = "Circulant-matrix primality test and baselines";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
    py::register_exception<IntegralityError>(m, "IntegralityError", PyExc_ArithmeticError);

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("n", &Verdict::n)
        .def_readonly("is_prime", &Verdict::is_prime)
        .def_property_readonly("method", [](const Verdict& v) { return v.method.name(); })
        .def_property_readonly("evidence", [](const Verdict& v) { return evidence_name(v.evidence); })
        .def("__bool__", [](const Verdict& v) { return v.is_prime; })
        .def("__repr__", [](const Verdict& v) {
            return "Verdict(n=" + std::to_string(v.n) + ", is_prime=" + (v.is_prime ? "True" : "False") +
                   ", method='" + v.method.name() + "', evidence='" + evidence_name(v.evidence) + "')";
        });

    m.def(
        "test",
        [](u64 n, const std::string& method, unsigned rounds, std::uint64_t seed, u64 branch_threshold) {
            return test(n, MethodId::parse(method, seed, rounds), CirculantOptions{branch_threshold});
        },
        py::arg("n"), py::arg("method") = "circulant-full", py::arg("rounds") = kDefaultMillerRabinRounds,
        py::arg("seed") = 1, py::arg("branch_threshold") = kDefaultBranchThreshold,
        py::call_guard<py::gil_scoped_release>());

    m.def("orbits", [](u64 n) { return compute_orbits(n).orbits; }, py::arg("n"));
    m.def("orbit_count", &orbit_count_direct, py::arg("n"));
    m.def("orbit_count_divisor_formula", &orbit_count_divisor_formula, py::arg("n"));

    m.def(
        "minpoly",
        [](u64 n, unsigned initial, unsigned max) {
            FactorSet f;
            {
                py::gil_scoped_release release;
                f = minimal_polynomial_factors(n, policy(initial, max));
            }
            return to_py(f);
        },
        "Factor coefficient lists, constant term first.", py::arg("n"),
        py::arg("initial_digits") = PrecisionPolicy{}.initial_digits,
        py::arg("max_digits") = PrecisionPolicy{}.max_digits);

    m.def("eigenvalues", [](u64 n) { return full_spectrum(n).to_complex(); }, py::arg("n"));
    m.def("spectral_property", &spectral_property, py::arg("n"));
    m.def(
        "phase_point",
        [](u64 n) {
            const auto p = phase_point(n);
            return py::make_tuple(p.factor_count, p.spectral_value, p.is_prime);
        },
        "(factor_count, spectral_value, is_prime)", py::arg("n"));

    m.def(
        "sweep",
        [](u64 lo, u64 hi, const std::string& method, const std::string& baseline, unsigned workers) {
            SweepReport r;
            {
                py::gil_scoped_release release;
                r = sweep_validate(lo, hi, MethodId::parse(method), MethodId::parse(baseline), {}, workers);
            }
            py::list dis;
            for (const auto& d : r.disagreements) dis.append(d.n);
            py::dict out;
            out["tested"] = r.tested;
            out["primes_found"] = r.primes_found;
            out["disagreements"] = dis;
            out["elapsed_seconds"] = r.elapsed_seconds;
            return out;
        },
        py::arg("lo"), py::arg("hi"), py::arg("method") = "circulant-full",
        py::arg("baseline") = "miller-rabin", py::arg("workers") = 1);
}
