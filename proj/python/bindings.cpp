#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ftt/bessel.hpp"
#include "ftt/chebyshev.hpp"
#include "ftt/cli.hpp"
#include "ftt/error.hpp"
#include "ftt/inequalities.hpp"
#include "ftt/semigroup.hpp"
#include "ftt/tridiagonal.hpp"

namespace py = pybind11;

namespace {

ftt::RealVector to_real(const std::vector<double>& a) { return ftt::RealVector(a); }

py::dict check_dict(const ftt::CheckReport& r) {
    py::dict d;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["margin"] = r.margin;
    d["holds"] = r.holds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ftt, m) {
    m.doc() = "Fan-Taussky-Todd inequalities: Chebyshev zeros, Jordan-block dissipativity, semigroups, Bessel bounds";

    py::register_exception<ftt::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<ftt::InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ftt::DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ftt::OverflowError& e) {
            PyErr_SetString(PyExc_OverflowError, e.what());
        }
    });

    py::enum_<ftt::JordanVariant>(m, "JordanVariant")
        .value("Standard", ftt::JordanVariant::Standard)
        .value("Modified", ftt::JordanVariant::Modified);
    py::enum_<ftt::Direction>(m, "Direction")
        .value("PlusJ", ftt::Direction::PlusJ)
        .value("MinusJ", ftt::Direction::MinusJ);

    // chebyshev
    m.def("u_eval", &ftt::chebyshev::u_eval, py::arg("n"), py::arg("x"));
    m.def("u_zeros", &ftt::chebyshev::u_zeros, py::arg("n"));
    m.def("u_diff_eval", &ftt::chebyshev::u_diff_eval, py::arg("n"), py::arg("x"));
    m.def("u_diff_zeros", &ftt::chebyshev::u_diff_zeros, py::arg("n"));

    // tridiagonal
    m.def("dissipativity_threshold", &ftt::dissipativity_threshold, py::arg("n"),
          py::arg("variant") = ftt::JordanVariant::Standard, py::arg("direction") = ftt::Direction::PlusJ);
    m.def(
        "check_dissipative",
        [](std::size_t n, double alpha, ftt::JordanVariant variant, double tol) {
            const auto r = ftt::check_dissipative(ftt::UpperBidiagonal(n, alpha, variant), tol);
            py::dict d;
            d["threshold"] = r.threshold;
            d["is_dissipative"] = r.is_dissipative;
            d["max_eigenvalue"] = r.max_eigenvalue;
            d["witness"] = r.witness.to_vector();
            return d;
        },
        py::arg("n"), py::arg("alpha"), py::arg("variant") = ftt::JordanVariant::Standard, py::arg("tol") = 1e-10);
    m.def(
        "eig_sym_tridiagonal",
        [](std::vector<double> diag, std::vector<double> offdiag, double tol) {
            return ftt::eig_sturm(ftt::SymTridiagonal(std::move(diag), std::move(offdiag)), tol);
        },
        py::arg("diag"), py::arg("offdiag"), py::arg("tol") = 1e-13);

    // inequalities; kinds by name ("ftt1", "ftt2", "conv1", "conv2")
    m.def(
        "sharp_constant", [](const std::string& kind, std::size_t n) { return ftt::sharp_constant(ftt::parse_kind(kind), n); },
        py::arg("kind"), py::arg("n"));
    m.def(
        "threshold_alpha",
        [](const std::string& kind, std::size_t n) { return ftt::threshold_alpha(ftt::parse_kind(kind), n); },
        py::arg("kind"), py::arg("n"));
    m.def(
        "verify",
        [](const std::string& kind, const std::vector<double>& a, double tol) {
            return check_dict(ftt::verify(ftt::parse_kind(kind), to_real(a), tol));
        },
        py::arg("kind"), py::arg("a"), py::arg("tol") = 1e-10);
    m.def(
        "extremal_vector",
        [](const std::string& kind, std::size_t n) { return ftt::extremal_vector(ftt::parse_kind(kind), n).to_vector(); },
        py::arg("kind"), py::arg("n"));

    // semigroup
    m.def(
        "jordan_block",
        [](std::size_t n, double alpha, ftt::JordanVariant variant) {
            return ftt::to_dense(ftt::UpperBidiagonal(n, alpha, variant));
        },
        py::arg("n"), py::arg("alpha"), py::arg("variant") = ftt::JordanVariant::Standard);
    m.def("expm", &ftt::expm_oracle, py::arg("q"), py::arg("x"), py::arg("tol") = 1e-15);
    m.def("exp_jordan_closed", &ftt::exp_jordan_closed, py::arg("n"), py::arg("alpha"), py::arg("x"));
    m.def("operator_norm", &ftt::operator_norm, py::arg("m"), py::arg("tol") = 1e-13);
    m.def(
        "contraction_curve",
        [](const ftt::DenseSquareMatrix& q, const std::vector<double>& xs, double tol) {
            const auto c = ftt::contraction_check(q, xs, tol);
            return py::make_tuple(c.xs, c.norms);
        },
        py::arg("q"), py::arg("xs"), py::arg("tol") = 1e-10);
    m.def(
        "gftt_check", [](const std::vector<double>& a, double x, double tol) { return check_dict(ftt::gftt_check(to_real(a), x, tol)); },
        py::arg("a"), py::arg("x"), py::arg("tol") = 1e-10);
    m.def(
        "gftt2_exact_lhs",
        [](const std::vector<double>& a, double alpha, double x) { return ftt::gftt2_exact_lhs(to_real(a), alpha, x); },
        py::arg("a"), py::arg("alpha"), py::arg("x"));
    m.def(
        "norm_preserving_subspace",
        [](const ftt::DenseSquareMatrix& q, double x, double tol) {
            std::vector<std::vector<double>> basis;
            for (const auto& v : ftt::norm_preserving_subspace(q, x, tol).vectors) basis.push_back(v.to_vector());
            return basis;
        },
        py::arg("q"), py::arg("x"), py::arg("tol") = 1e-8);

    // bessel
    m.def("i0_partial", &ftt::bessel::i0_partial, py::arg("n"), py::arg("x"));
    m.def("bessel_bound1", &ftt::bessel::bound1, py::arg("n"), py::arg("x"));
    m.def("bessel_bound2", &ftt::bessel::bound2, py::arg("n"), py::arg("x"));
    m.def(
        "threshold_x0",
        [](std::size_t n, double tol, double search_hi) {
            const auto r = ftt::bessel::threshold_x0(n, tol, search_hi);
            py::dict d;
            d["n"] = r.n;
            d["status"] = ftt::bessel::to_string(r.status);
            d["x0"] = r.x0;
            d["lo"] = r.lo;
            d["hi"] = r.hi;
            d["sign_changes"] = r.sign_changes;
            d["iterations"] = r.iterations;
            return d;
        },
        py::arg("n"), py::arg("tol") = 1e-12, py::arg("search_hi") = ftt::bessel::kDefaultSearchHi);

    // same entry point as the ftt executable
    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "ftt");
            std::ostringstream out;
            std::ostringstream err;
            const int code = ftt::cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs `ftt <args>`; returns (exit_code, stdout, stderr).");
}
