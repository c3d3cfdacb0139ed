#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "fockbundle/jc_bundle.hpp"
#include "fockbundle/spinrep.hpp"
#include "fockbundle/suites.hpp"
#include "fockbundle/veronese.hpp"

namespace py = pybind11;
using namespace fockbundle;

namespace {

py::object to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict states_to_py(const SlotStates& s) {
    py::dict d;
    for (const auto& [slot, ns] : s) d[py::int_(slot)] = std::vector<long>(ns.begin(), ns.end());
    return d;
}

// Columns that are singular come back as NaN.
py::array_t<cplx> dense(const OpMatrix& m, long n_max) {
    const long dim = n_max + 1;
    py::array_t<cplx> out({m.rows() * dim, m.cols() * dim});
    auto r = out.mutable_unchecked<2>();
    const cplx nan(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN());
    for (py::ssize_t i = 0; i < r.shape(0); ++i)
        for (py::ssize_t j = 0; j < r.shape(1); ++j) r(i, j) = 0.0;
    for (int c = 0; c < m.cols(); ++c) {
        for (long n = 0; n <= n_max; ++n) {
            const auto col = m.column(c, n);
            const py::ssize_t jj = c * dim + n;
            if (!col) {
                for (py::ssize_t i = 0; i < r.shape(0); ++i) r(i, jj) = nan;
                continue;
            }
            for (int s = 0; s < m.rows(); ++s)
                for (const auto& [k, v] : col->components[s].coeffs())
                    if (k <= n_max) r(s * dim + k, jj) = v;
        }
    }
    return out;
}

py::array_t<cplx> eigen_to_py(const Eigen::MatrixXcd& m) {
    py::array_t<cplx> out({m.rows(), m.cols()});
    auto r = out.mutable_unchecked<2>();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return out;
}

jc::JCParams params(double theta, double g, double t) {
    jc::JCParams p;
    p.theta = theta;
    p.g = g;
    p.t = t;
    return p;
}

ChartLabel label_of(const std::string& s) {
    if (s == "I") return ChartLabel::I;
    if (s == "II") return ChartLabel::II;
    throw py::value_error("chart must be 'I' or 'II'");
}

spin::Spin spin_of(int two_j) {
    switch (two_j) {
        case 1: return spin::Spin::Half;
        case 2: return spin::Spin::One;
        case 3: return spin::Spin::ThreeHalves;
    }
    throw py::value_error("two_j must be 1, 2 or 3");
}

}  // namespace

PYBIND11_MODULE(_fockbundle, m) {
    m.doc() = "Exact ladder-operator algebra and checks for the Jaynes-Cummings operator bundle";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<suites::ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<FockOperator>(m, "Operator")
        .def(py::init<>())
        .def_static("identity", &FockOperator::identity)
        .def_static("scalar", &FockOperator::scalar)
        .def_static("annihilation", &FockOperator::annihilation)
        .def_static("creation", &FockOperator::creation)
        .def_static("number", &FockOperator::number)
        .def("adjoint", &FockOperator::adjoint)
        .def("matrix_element", &FockOperator::matrix_element, py::arg("m"), py::arg("n"))
        .def("is_singular_at", &FockOperator::is_singular_at)
        .def("singular_support", [](const FockOperator& a, long n_max) {
            const auto s = a.singular_support(n_max);
            return std::vector<long>(s.begin(), s.end());
        })
        .def("degrees", [](const FockOperator& a) {
            std::vector<int> d;
            for (const auto& [k, c] : a.terms()) d.push_back(k);
            return d;
        })
        .def("dense", [](const FockOperator& a, long n_max) { return dense(OpMatrix::diag({a}), n_max); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def("__mul__", [](const FockOperator& a, const FockOperator& b) { return a * b; })
        .def("__mul__", [](const FockOperator& a, cplx s) { return s * a; })
        .def("__rmul__", [](const FockOperator& a, cplx s) { return s * a; });

    py::class_<OpMatrix>(m, "OpMatrix")
        .def_property_readonly("shape", [](const OpMatrix& a) { return py::make_tuple(a.rows(), a.cols()); })
        .def("__getitem__", [](const OpMatrix& a, std::pair<int, int> ij) {
            if (ij.first < 0 || ij.first >= a.rows() || ij.second < 0 || ij.second >= a.cols())
                throw py::index_error("entry out of range");
            return a(ij.first, ij.second);
        })
        .def("adjoint", &OpMatrix::adjoint)
        .def("singular_support", [](const OpMatrix& a, long n_max) { return states_to_py(a.singular_support(n_max)); })
        .def("dense", &dense, py::arg("n_max"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("__matmul__", [](const OpMatrix& a, const OpMatrix& b) { return a * b; });

    m.def("h_jc", [](double theta) { return jc::build_h_jc(params(theta, 1.0, 0.0)); }, py::arg("theta"));
    m.def("chart_unitary", [](double theta, const std::string& chart) {
        return jc::build_chart(params(theta, 1.0, 0.0), label_of(chart)).unitary;
    }, py::arg("theta"), py::arg("chart"));
    m.def("dirac_string_map", [](double theta, const std::string& chart, long n_max) {
        return to_py(jc::to_json(jc::dirac_string_map(params(theta, 1.0, 0.0), label_of(chart), n_max)));
    }, py::arg("theta"), py::arg("chart"), py::arg("n_max") = 48);
    m.def("transition", [](double theta) { return jc::transition_operator(params(theta, 1.0, 0.0)).left_form; },
          py::arg("theta"));
    m.def("projector", [](double theta) { return jc::projector_pjc(params(theta, 1.0, 0.0)); }, py::arg("theta"));
    m.def("propagator", [](double theta, double g, double t) { return jc::propagator_closed_form(params(theta, g, t)); },
          py::arg("theta"), py::arg("g") = 1.0, py::arg("t") = 1.0);
    m.def("lift", [](double theta, int n) { return veronese::lift(veronese::build_family(theta, n)).a; },
          py::arg("theta"), py::arg("n"));
    m.def("nc_spin_rep", [](double theta, int two_j) { return spin::nc_spin_rep(theta, spin_of(two_j)); },
          py::arg("theta"), py::arg("two_j"));
    m.def("spin_rep", [](cplx alpha, cplx beta, int two_j) {
        return eigen_to_py(spin::spin_rep(spin::SU2Element::make(alpha, beta), spin_of(two_j)));
    }, py::arg("alpha"), py::arg("beta"), py::arg("two_j"));

    m.def("verify", [](const std::string& suite, std::vector<double> theta, long n_max, double tol, std::uint64_t seed,
                       std::vector<std::string> whitelist) {
        suites::SuiteConfig c;
        c.suite = suites::parse_suite(suite);
        if (!theta.empty()) c.theta_list = std::move(theta);
        c.n_max = n_max;
        c.tol = tol;
        c.seed = seed;
        c.whitelist = std::move(whitelist);
        c.validate();
        suites::RunResult r;
        {
            py::gil_scoped_release release;
            r = suites::run(c);
        }
        return to_py(r.report);
    }, py::arg("suite") = "all", py::arg("theta") = std::vector<double>{}, py::arg("n_max") = 48,
       py::arg("tol") = 1e-10, py::arg("seed") = 20240601, py::arg("whitelist") = std::vector<std::string>{});

    m.attr("__version__") = "0.1.0";
}
