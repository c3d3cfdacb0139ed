#include "fockbundle/spinrep.hpp"

#include <cmath>
#include <stdexcept>

#include "fockbundle/veronese.hpp"

namespace fockbundle::spin {

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

Eigen::MatrixXcd kron_numeric(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::MatrixXcd block_diag(const std::vector<Eigen::MatrixXcd>& blocks) {
    Eigen::Index n = 0;
    for (const auto& b : blocks) n += b.rows();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    Eigen::Index k = 0;
    for (const auto& b : blocks) {
        out.block(k, k, b.rows(), b.cols()) = b;
        k += b.rows();
    }
    return out;
}

CheckRecord numeric_record(std::string name, std::string anchor, double dev, double tol) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.anchor = std::move(anchor);
    rec.max_deviation = dev;
    rec.tolerance = tol;
    rec.pass = dev <= tol;
    return rec;
}

}  // namespace

int dimension(Spin j) {
    switch (j) {
        case Spin::Half: return 2;
        case Spin::One: return 3;
        case Spin::ThreeHalves: return 4;
    }
    return 0;
}

std::string to_string(Spin j) {
    switch (j) {
        case Spin::Half: return "1/2";
        case Spin::One: return "1";
        case Spin::ThreeHalves: return "3/2";
    }
    return "?";
}

Spin parse_spin(const std::string& s) {
    if (s == "1/2" || s == "0.5") return Spin::Half;
    if (s == "1" || s == "1.0") return Spin::One;
    if (s == "3/2" || s == "1.5") return Spin::ThreeHalves;
    throw std::invalid_argument("unsupported spin '" + s + "' (expected 1/2, 1 or 3/2)");
}

SU2Element SU2Element::make(cplx alpha, cplx beta, double tol) {
    const double n = std::norm(alpha) + std::norm(beta);
    if (!(std::abs(n - 1.0) <= tol))
        throw std::invalid_argument("SU2Element: |alpha|^2 + |beta|^2 = " + std::to_string(n) + " is not 1");
    SU2Element e;
    e.alpha = alpha;
    e.beta = beta;
    return e;
}

Eigen::Matrix2cd SU2Element::matrix() const {
    Eigen::Matrix2cd m;
    m << alpha, -std::conj(beta), beta, std::conj(alpha);
    return m;
}

SU2Element operator*(const SU2Element& a, const SU2Element& b) {
    const Eigen::Matrix2cd m = a.matrix() * b.matrix();
    SU2Element e;
    e.alpha = m(0, 0);
    e.beta = m(1, 0);
    return e;
}

SU2Element random_su2(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    cplx a, b;
    double n;
    do {
        a = cplx(gauss(rng), gauss(rng));
        b = cplx(gauss(rng), gauss(rng));
        // Full 2x2 draw; the second column is replaced by the det = 1 completion.
        gauss(rng), gauss(rng), gauss(rng), gauss(rng);
        n = std::sqrt(std::norm(a) + std::norm(b));
    } while (n < 1e-8);
    SU2Element e;
    e.alpha = a / n;
    e.beta = b / n;
    return e;
}

Eigen::MatrixXcd spin_rep(const SU2Element& e, Spin j) {
    const cplx a = e.alpha, b = e.beta;
    const cplx ac = std::conj(a), bc = std::conj(b);
    const double aa = std::norm(a), bb = std::norm(b);
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    switch (j) {
        case Spin::Half: return e.matrix();
        case Spin::One: {
            Eigen::Matrix3cd m;
            m << a * a, -s2 * a * bc, bc * bc,
                 s2 * a * b, aa - bb, -s2 * ac * bc,
                 b * b, s2 * ac * b, ac * ac;
            return m;
        }
        case Spin::ThreeHalves: {
            Eigen::Matrix4cd m;
            m << a * a * a, -s3 * a * a * bc, s3 * a * bc * bc, -bc * bc * bc,
                 s3 * a * a * b, (aa - 2.0 * bb) * a, -(2.0 * aa - bb) * bc, s3 * ac * bc * bc,
                 s3 * a * b * b, (2.0 * aa - bb) * b, (aa - 2.0 * bb) * ac, -s3 * ac * ac * bc,
                 b * b * b, s3 * ac * b * b, s3 * ac * ac * b, ac * ac * ac;
            return m;
        }
    }
    throw std::invalid_argument("spin_rep: unsupported spin");
}

Eigen::Matrix4d cg_t4() {
    const double h = 1.0 / std::sqrt(2.0);
    Eigen::Matrix4d t;
    t << 0, 1, 0, 0,
         h, 0, h, 0,
         -h, 0, h, 0,
         0, 0, 0, 1;
    return t;
}

Eigen::Matrix<double, 8, 8> cg_t8() {
    const double a = 1.0 / std::sqrt(2.0), b = 1.0 / std::sqrt(6.0), c = 1.0 / std::sqrt(3.0);
    const double d = std::sqrt(2.0) / std::sqrt(3.0);
    Eigen::Matrix<double, 8, 8> t;
    t << 0, 0, 0, 0, 1, 0, 0, 0,
         a, 0, b, 0, 0, c, 0, 0,
         -a, 0, b, 0, 0, c, 0, 0,
         0, 0, 0, d, 0, 0, c, 0,
         0, 0, -d, 0, 0, c, 0, 0,
         0, a, 0, -b, 0, 0, c, 0,
         0, -a, 0, -b, 0, 0, c, 0,
         0, 0, 0, 0, 0, 0, 0, 1;
    return t;
}

CheckRecord cg_decompose_pair(const SU2Element& e, double tol) {
    const Eigen::MatrixXcd t = cg_t4().cast<cplx>();
    const Eigen::MatrixXcd a = e.matrix();
    const Eigen::MatrixXcd lhs = t.adjoint() * kron_numeric(a, a) * t;
    const Eigen::MatrixXcd rhs = block_diag({Eigen::MatrixXcd::Identity(1, 1), spin_rep(e, Spin::One)});
    auto rec = numeric_record("cg_pair", "T4^dagger (A x A) T4 = diag(1, phi_1(A))", max_abs(lhs - rhs), tol);
    rec.details["top_left"] = {lhs(0, 0).real(), lhs(0, 0).imag()};
    return rec;
}

CheckRecord cg_decompose_triple(const SU2Element& e, double tol) {
    const Eigen::MatrixXcd t = cg_t8().cast<cplx>();
    const Eigen::MatrixXcd a = e.matrix();
    const Eigen::MatrixXcd lhs = t.adjoint() * kron_numeric(kron_numeric(a, a), a) * t;
    const Eigen::MatrixXcd rhs = block_diag({a, a, spin_rep(e, Spin::ThreeHalves)});
    return numeric_record("cg_triple", "T8^dagger (A x A x A) T8 = diag(A, A, phi_{3/2}(A))", max_abs(lhs - rhs), tol);
}

VerificationReport classical_spin_report(std::uint64_t seed, int pairs, double tol) {
    VerificationReport rep;
    rep.suite = "spin_classical";
    rep.parameters = {{"seed", seed}, {"pairs", pairs}, {"tol", tol}};
    std::mt19937_64 rng(seed);
    const Spin spins[3] = {Spin::Half, Spin::One, Spin::ThreeHalves};
    double unit[3] = {0, 0, 0}, hom[3] = {0, 0, 0};
    double pair = 0, triple = 0;
    for (int i = 0; i < pairs; ++i) {
        const SU2Element a = random_su2(rng);
        const SU2Element b = random_su2(rng);
        const SU2Element ab = a * b;
        for (int k = 0; k < 3; ++k) {
            const Eigen::MatrixXcd pa = spin_rep(a, spins[k]);
            const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(pa.rows(), pa.cols());
            unit[k] = std::max(unit[k], max_abs(pa.adjoint() * pa - id));
            hom[k] = std::max(hom[k], max_abs(spin_rep(ab, spins[k]) - pa * spin_rep(b, spins[k])));
        }
        pair = std::max(pair, cg_decompose_pair(a, tol).max_deviation);
        triple = std::max(triple, cg_decompose_triple(a, tol).max_deviation);
    }
    for (int k = 0; k < 3; ++k) {
        const std::string j = to_string(spins[k]);
        rep.add(numeric_record("unitary_j" + j, "phi_j(A)^dagger phi_j(A) = 1", unit[k], tol));
        rep.add(numeric_record("homomorphism_j" + j, "phi_j(AB) = phi_j(A) phi_j(B)", hom[k], tol));
    }
    const Eigen::Matrix4d t4 = cg_t4();
    const Eigen::Matrix<double, 8, 8> t8 = cg_t8();
    const double ortho = std::max((t4.transpose() * t4 - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(),
                                  (t8.transpose() * t8 - Eigen::Matrix<double, 8, 8>::Identity()).cwiseAbs().maxCoeff());
    rep.add(numeric_record("cg_orthonormal", "T^dagger T = 1", ortho, 1e-15));
    rep.add(numeric_record("cg_pair", "T4^dagger (A x A) T4 = diag(1, phi_1(A))", pair, tol));
    rep.add(numeric_record("cg_triple", "T8^dagger (A x A x A) T8 = diag(A, A, phi_{3/2}(A))", triple, tol));
    return rep;
}

OpMatrix nc_v(double theta) {
    using veronese::x_op;
    using veronese::y_op;
    const FockOperator y0 = y_op(theta, 0);
    return OpMatrix::from_rows({{x_op(theta, 0), -veronese::y_dagger_op(theta, 0)}, {y0, x_op(theta, 1)}});
}

OpMatrix nc_spin_rep(double theta, Spin j) {
    if (j == Spin::Half) return nc_v(theta);
    using veronese::x_op;
    using veronese::y_op;
    const FockOperator x0 = x_op(theta, 0), x1 = x_op(theta, 1), x2 = x_op(theta, 2), x3 = x_op(theta, 3);
    const FockOperator y0 = y_op(theta, 0), y1 = y_op(theta, 1), y2 = y_op(theta, 2);
    const FockOperator y0d = veronese::y_dagger_op(theta, 0), y1d = veronese::y_dagger_op(theta, 1),
                       y2d = veronese::y_dagger_op(theta, 2);
    const cplx s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    if (j == Spin::One) {
        return OpMatrix::from_rows({
            {x0 * x0, -s2 * (x0 * y0d), y0d * y1d},
            {s2 * (y0 * x0), x1 * x1 - y1d * y1, -s2 * (x1 * y1d)},
            {y1 * y0, s2 * (y1 * x1), x2 * x2},
        });
    }
    const FockOperator two(FockOperator::scalar(2.0));
    return OpMatrix::from_rows({
        {x0 * x0 * x0, -s3 * (x0 * x0 * y0d), s3 * (x0 * y0d * y1d), -(y0d * y1d * y2d)},
        {s3 * (y0 * x0 * x0), x1 * (x1 * x1 - two * y1d * y1), -((two * x1 * x1 - y1d * y1) * y1d),
         s3 * (x1 * y1d * y2d)},
        {s3 * (y1 * y0 * x0), y1 * (two * x1 * x1 - y1d * y1), x2 * (x2 * x2 - two * y2d * y2),
         -s3 * (x2 * x2 * y2d)},
        {y2 * y1 * y0, s3 * (y2 * y1 * x1), s3 * (y2 * x2 * x2), x3 * x3 * x3},
    });
}

VerificationReport nc_candidate_report(const OpMatrix& phi, double theta, int two_j, long n_max, double tol) {
    if (phi.rows() != two_j + 1 || phi.cols() != two_j + 1)
        throw std::invalid_argument("nc_candidate_report: matrix size must be 2j + 1");
    VerificationReport rep;
    rep.suite = "nc_spin_2j" + std::to_string(two_j);
    rep.parameters = {{"theta", theta}, {"two_j", two_j}, {"n_max", n_max}, {"tol", tol}};
    rep.add(check_unitary(phi, n_max, tol));
    const veronese::LiftedColumn lifted = veronese::lift(veronese::build_family(theta, two_j));
    rep.add(grid_check("first_column", "first column of Phi_j(V) = A_{2j}", phi.block(0, 0, two_j + 1, 1), lifted.a,
                       n_max, tol));
    std::vector<FockOperator> e(two_j + 1);
    e[0] = FockOperator::identity();
    rep.add(grid_check("projector", "Phi_j diag(1,0,...,0) Phi_j^dagger = P_{2j}", phi * OpMatrix::diag(e) * phi.adjoint(),
                       veronese::projector_pn(lifted), n_max, tol));
    return rep;
}

VerificationReport nc_spin_report(double theta, Spin j, long n_max, double tol) {
    const int two_j = dimension(j) - 1;
    return nc_candidate_report(nc_spin_rep(theta, j), theta, two_j, n_max, tol);
}

OpMatrix vv_displayed(double theta) {
    using veronese::x_op;
    using veronese::y_op;
    const FockOperator x0 = x_op(theta, 0), x1 = x_op(theta, 1);
    const FockOperator y0 = y_op(theta, 0), y0d = veronese::y_dagger_op(theta, 0);
    return OpMatrix::from_rows({
        {x0 * x0, -(x0 * y0d), -(y0d * x0), y0d * y0d},
        {x0 * y0, x0 * x1, -(y0d * y0), -(y0d * x1)},
        {y0 * x0, -(y0 * y0d), x1 * x0, -(x1 * y0d)},
        {y0 * y0, y0 * x1, x1 * y0, x1 * x1},
    });
}

VerificationReport tensor_breakdown_check(double theta, long n_max, double threshold, double layout_tol,
                                          std::uint64_t control_seed) {
    VerificationReport rep;
    rep.suite = "tensor_breakdown";
    rep.parameters = {{"theta", theta}, {"n_max", n_max}, {"threshold", threshold}, {"control_seed", control_seed}};
    const OpMatrix t = OpMatrix::constant(cg_t4().cast<cplx>());
    const OpMatrix v = nc_v(theta);
    const OpMatrix vv = kron(v, v);

    rep.add(grid_check("vv_layout", "V x V entries as displayed, (2,3) = -Y_0^dagger Y_0", vv, vv_displayed(theta),
                       n_max, layout_tol));

    const OpMatrix lhs = t.adjoint() * vv * t;
    OpMatrix rhs(4, 4);
    rhs(0, 0) = FockOperator::identity();
    const OpMatrix phi1 = nc_spin_rep(theta, Spin::One);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) rhs(i + 1, k + 1) = phi1(i, k);
    const GridComparison cmp = compare_on_grid(lhs, rhs, n_max);
    CheckRecord rec;
    rec.max_deviation = cmp.max_deviation;
    rec.excluded = cmp.excluded;
    rec.details["location"] = grid_location(cmp);
    if (theta == 0.0) {
        // X_0 = X_{-1} = 1/sqrt(2) away from the vacuum, so V x V commutes back
        rec.name = "breakdown_absent_theta0";
        rec.anchor = "T^dagger (V x V) T = diag(1, Phi_1(V)) off the singular vacuum at theta = 0";
        rec.tolerance = layout_tol;
        rec.pass = cmp.max_deviation <= layout_tol;
        rec.details["criterion"] = "max_deviation <= tolerance";
    } else {
        rec.name = "breakdown_nonzero";
        rec.anchor = "T^dagger (V x V) T != diag(1, Phi_1(V))";
        rec.tolerance = threshold;
        rec.pass = cmp.max_deviation > threshold;
        rec.details["criterion"] = "max_deviation > tolerance";
    }
    rep.add(rec);

    std::mt19937_64 rng(control_seed);
    const SU2Element a = random_su2(rng);
    const OpMatrix am = OpMatrix::constant(a.matrix());
    OpMatrix crhs(4, 4);
    crhs(0, 0) = FockOperator::identity();
    const OpMatrix cphi = OpMatrix::constant(spin_rep(a, Spin::One));
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) crhs(i + 1, k + 1) = cphi(i, k);
    rep.add(grid_check("classical_control", "T^dagger (A x A) T = diag(1, phi_1(A))", t.adjoint() * kron(am, am) * t,
                       crhs, 4, layout_tol));
    return rep;
}

}  // namespace fockbundle::spin
