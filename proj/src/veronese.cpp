#include "fockbundle/veronese.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fockbundle/berry.hpp"
#include "fockbundle/jc_bundle.hpp"

namespace fockbundle::veronese {

namespace {

OpMatrix one(const FockOperator& op) { return OpMatrix::diag({op}); }

// sqrt((N - j)/N): zero at N = j, singular where negative or N = 0. For j = 0
// the factor is dropped: Y_0 and Z_0 are first written without it, and keeping
// sqrt(N/N) would put a spurious string on the vacuum.
Symbol ratio_root(int j) {
    if (j == 0) return Symbol(1.0);
    return sqrt(divide(Symbol::number(-j), Symbol::count(0)));
}

}  // namespace

Symbol x_symbol(double theta, int j) {
    const double sigma = sigma_for(theta);
    const Symbol r = jc::r_symbol(theta, 1 - j);
    return divide(r + Symbol(theta), sqrt(Symbol(2.0) * r * (r + Symbol(theta)), sigma), sigma);
}

FockOperator x_op(double theta, int j) { return FockOperator::diagonal(x_symbol(theta, j)); }

namespace {

Symbol y_prefactor(double theta, int j) {
    const double sigma = sigma_for(theta);
    const Symbol r = jc::r_symbol(theta, -j);
    return ratio_root(j) * divide(Symbol(1.0), sqrt(Symbol(2.0) * r * (r + Symbol(theta)), sigma), sigma);
}

Symbol z_prefactor(double theta, int j) {
    const Symbol r = jc::r_symbol(theta, -j);
    return ratio_root(j) * divide(Symbol(1.0), r + Symbol(theta), sigma_for(theta));
}

}  // namespace

FockOperator y_op(double theta, int j) {
    return FockOperator::diagonal(y_prefactor(theta, j)) * FockOperator::creation();
}

FockOperator z_op(double theta, int j) {
    return FockOperator::diagonal(z_prefactor(theta, j)) * FockOperator::creation();
}

FockOperator y_dagger_op(double theta, int j) {
    return FockOperator::annihilation() * FockOperator::diagonal(y_prefactor(theta, j));
}

FockOperator z_dagger_op(double theta, int j) {
    return FockOperator::annihilation() * FockOperator::diagonal(z_prefactor(theta, j));
}

VeroneseFamily build_family(double theta, int n) {
    if (n < 1) throw std::invalid_argument("build_family: degree n must be >= 1");
    VeroneseFamily f;
    f.theta = theta;
    f.n = n;
    for (int j = 0; j <= n; ++j) {
        f.x.push_back(x_symbol(theta, j));
        f.xo.push_back(x_op(theta, j));
        f.y.push_back(y_op(theta, j));
        f.z.push_back(z_op(theta, j));
        f.yd.push_back(y_dagger_op(theta, j));
        f.zd.push_back(z_dagger_op(theta, j));
    }
    return f;
}

VerificationReport useful_formulas_report(double theta, int j_max, long n_max, double tol) {
    VerificationReport rep;
    rep.suite = "veronese_formulas";
    rep.parameters = {{"theta", theta}, {"j_max", j_max}, {"n_max", n_max}, {"tol", tol}};
    const double sigma = sigma_for(theta);
    for (int j = 0; j <= j_max; ++j) {
        const FockOperator x = x_op(theta, j);
        const FockOperator y = y_op(theta, j);
        const FockOperator yd = y_dagger_op(theta, j);
        const std::string tag = "_j" + std::to_string(j);
        rep.add(grid_check("unit_sum" + tag, "X_{-j}^2 + Y_{-j}^dagger Y_{-j} = 1", one(x * x + yd * y),
                           OpMatrix::identity(1), n_max, tol));
        const FockOperator yp = y_op(theta, j - 1);
        rep.add(grid_check("shift_identity" + tag, "Y_{-j}^dagger Y_{-j} = Y_{-j+1} Y_{-j+1}^dagger",
                           one(yd * y), one(yp * y_dagger_op(theta, j - 1)), n_max, tol));
        rep.add(grid_check("z_from_y" + tag, "Z_{-j} = Y_{-j} X_{-j}^{-1}", one(z_op(theta, j)),
                           one(y * inverse(x, sigma)), n_max, tol));
    }
    return rep;
}

CheckRecord commutation_check(const VeroneseFamily& family, int j, int k, long n_max, double tol) {
    const double th = family.theta;
    const double sigma = sigma_for(th);
    const FockOperator y = y_op(th, j);
    const FockOperator lhs = y * inverse(x_op(th, k), sigma);
    const FockOperator rhs = inverse(x_op(th, k + 1), sigma) * y;
    CheckRecord rec = grid_check("commutation_j" + std::to_string(j) + "_k" + std::to_string(k),
                                 "Y_{-j} X_{-k}^{-1} = X_{-(k+1)}^{-1} Y_{-j}", one(lhs), one(rhs), n_max, tol);
    rec.details["j"] = j;
    rec.details["k"] = k;
    return rec;
}

LiftedColumn lift(const VeroneseFamily& f) {
    const int n = f.n;
    LiftedColumn l;
    l.n = n;
    l.theta = f.theta;
    l.a = OpMatrix(n + 1, 1);
    l.z = OpMatrix(n, 1);
    l.a_dagger = OpMatrix(1, n + 1);
    l.z_dagger = OpMatrix(1, n);
    for (int j = 0; j <= n; ++j) {
        const double c = std::sqrt(berry::binomial(n, j));
        // Y_{-(j-1)} ... Y_0, leftmost factor applied last
        FockOperator ys = FockOperator::identity();
        FockOperator zs = FockOperator::identity();
        FockOperator yds = FockOperator::identity();
        FockOperator zds = FockOperator::identity();
        for (int i = 0; i < j; ++i) {
            ys = f.y[i] * ys;
            zs = f.z[i] * zs;
            yds = yds * f.yd[i];
            zds = zds * f.zd[i];
        }
        const FockOperator xp = power(f.xo[0], n - j);
        l.a(j, 0) = c * (ys * xp);
        l.a_dagger(0, j) = c * (xp * yds);
        if (j >= 1) {
            l.z(j - 1, 0) = c * zs;
            l.z_dagger(0, j - 1) = c * zds;
        }
    }
    return l;
}

namespace {

FockOperator one_plus_z0dz0(double theta) {
    return FockOperator::identity() + z_dagger_op(theta, 0) * z_op(theta, 0);
}

OpMatrix stacked_column(const LiftedColumn& l) {
    OpMatrix c(l.n + 1, 1);
    c(0, 0) = FockOperator::identity();
    for (int j = 0; j < l.n; ++j) c(j + 1, 0) = l.z(j, 0);
    return c;
}

}  // namespace

VerificationReport lift_report(const LiftedColumn& l, long n_max, double tol) {
    VerificationReport rep;
    rep.suite = "veronese_lift_n" + std::to_string(l.n);
    rep.parameters = {{"theta", l.theta}, {"n", l.n}, {"n_max", n_max}, {"tol", tol}};
    const double sigma = sigma_for(l.theta);
    rep.add(grid_check("isometry", "A_n^dagger A_n = 1", l.a_dagger * l.a, OpMatrix::identity(1), n_max, tol));

    const FockOperator base = one_plus_z0dz0(l.theta);
    const OpMatrix factored = stacked_column(l) * one(pow(base, -0.5 * l.n, sigma));
    rep.add(grid_check("factored_form", "A_n = (1; Z_n) (1 + Z_0^dagger Z_0)^{-n/2}", l.a, factored, n_max, tol));

    // both sides grow like (1 + |z|^2)^n near the chart edge; compare relative to that size
    const OpMatrix lhs = OpMatrix::identity(1) + l.z_dagger * l.z;
    const FockOperator rhs = power(base, l.n);
    double scale = 1.0;
    for (long k = 0; k <= n_max; ++k)
        if (auto col = rhs.column(k))
            for (const auto& [m, v] : col->coeffs()) scale = std::max(scale, std::abs(v));
    CheckRecord bp = grid_check("binomial_power", "1 + Z_n^dagger Z_n = (1 + Z_0^dagger Z_0)^n", lhs, one(rhs),
                                n_max, tol * scale);
    bp.details["entry_scale"] = scale;
    rep.add(bp);
    return rep;
}

OpMatrix projector_pn(const LiftedColumn& l) { return l.a * l.a_dagger; }

OpMatrix oike_projector(const LiftedColumn& l) {
    const double sigma = sigma_for(l.theta);
    const OpMatrix zz = OpMatrix::identity(1) + l.z_dagger * l.z;
    const FockOperator w = inverse(zz(0, 0), sigma);
    OpMatrix p(l.n + 1, l.n + 1);
    p(0, 0) = w;
    for (int j = 0; j < l.n; ++j) {
        const FockOperator& zj = l.z(j, 0);
        p(0, j + 1) = w * l.z_dagger(0, j);
        p(j + 1, 0) = zj * w;
        for (int k = 0; k < l.n; ++k) p(j + 1, k + 1) = zj * w * l.z_dagger(0, k);
    }
    return p;
}

VerificationReport projector_report(const LiftedColumn& l, long n_max, double tol) {
    VerificationReport rep;
    rep.suite = "veronese_projector_n" + std::to_string(l.n);
    rep.parameters = {{"theta", l.theta}, {"n", l.n}, {"n_max", n_max}, {"tol", tol}};
    const OpMatrix p = projector_pn(l);
    rep.add(check_idempotent_hermitian(p, n_max, tol));
    rep.add(grid_check("eigenvector", "P_n A_n = A_n", p * l.a, l.a, n_max, tol));
    rep.add(grid_check("oike_layout", "A_n A_n^dagger = [[W, W Z^dagger], [Z W, Z W Z^dagger]]", p,
                       oike_projector(l), n_max, tol));
    if (l.n == 1) {
        jc::JCParams jp;
        jp.theta = l.theta;
        rep.add(grid_check("matches_pjc", "P_1 = P_JC", p, jc::projector_pjc(jp), n_max, tol));
    }
    return rep;
}

VerificationReport classical_limit_report(double theta, int n, const std::vector<double>& radii, double phase) {
    VerificationReport rep;
    rep.suite = "veronese_classical_limit_n" + std::to_string(n);
    rep.parameters = {{"theta", theta}, {"n", n}, {"phase", phase}, {"radii", radii}};
    const LiftedColumn l = lift(build_family(theta, n));
    for (int j = 1; j <= n; ++j) {
        CheckRecord rec;
        rec.name = "coherent_decay_j" + std::to_string(j);
        rec.anchor = "<alpha|Z_n[j]|alpha> -> sqrt(C(n,j)) Z_c^j";
        json errors = json::array();
        double prev = std::numeric_limits<double>::infinity();
        bool monotone = true;
        for (double radius : radii) {
            const cplx alpha = std::polar(radius, phase);
            const FockVector state = jc::coherent_state(alpha);
            const cplx value = jc::expectation(l.z(j - 1, 0), state);
            const berry::R3Point pt = berry::R3Point::make(alpha.real(), -alpha.imag(), theta);
            const cplx target = berry::local_veronese(berry::classical_targets(pt).z_c, n)[j - 1];
            const double err = std::abs(value - target) / std::abs(target);
            errors.push_back(err);
            if (!(err < prev)) monotone = false;
            prev = err;
        }
        rec.max_deviation = prev;
        rec.tolerance = 0.0;
        rec.pass = monotone;
        rec.details["relative_errors"] = errors;
        rec.details["monotone"] = monotone;
        rep.add(rec);
    }
    return rep;
}

}  // namespace fockbundle::veronese
