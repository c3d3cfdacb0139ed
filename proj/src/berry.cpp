#include "fockbundle/berry.hpp"

#include <cmath>

#include "fockbundle/spinrep.hpp"

namespace fockbundle::berry {

namespace {

const cplx kI{0.0, 1.0};

CheckRecord numeric_record(std::string name, std::string anchor, double dev, double tol) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.anchor = std::move(anchor);
    rec.max_deviation = dev;
    rec.tolerance = tol;
    rec.pass = dev <= tol;
    return rec;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

R3Point R3Point::make(double x, double y, double z) {
    if (x == 0.0 && y == 0.0 && z == 0.0) throw std::invalid_argument("R3Point: the origin is excluded");
    return R3Point{x, y, z};
}

double R3Point::r() const { return std::sqrt(x * x + y * y + z * z); }

Eigen::Matrix2cd berry_h(const R3Point& p) {
    Eigen::Matrix2cd h;
    h << p.z, cplx(p.x, -p.y), cplx(p.x, p.y), -p.z;
    return h;
}

Eigen::Matrix2cd chart_unitary(const R3Point& p, ChartLabel label, double sigma) {
    const double r = p.r();
    const cplx w(p.x, p.y);
    Eigen::Matrix2cd u;
    if (label == ChartLabel::I) {
        const double s = r + p.z;
        if (s < sigma * r) throw ChartDomainError("chart I: point on the lower Dirac string");
        u << s, -std::conj(w), w, s;
        return u / std::sqrt(2.0 * r * s);
    }
    const double s = r - p.z;
    if (s < sigma * r) throw ChartDomainError("chart II: point on the upper Dirac string");
    u << std::conj(w), -s, s, w;
    return u / std::sqrt(2.0 * r * s);
}

Eigen::Matrix2cd transition_fn(const R3Point& p, double sigma) {
    const double rho = std::hypot(p.x, p.y);
    if (rho < sigma * p.r()) throw ChartDomainError("transition function: point on the z-axis");
    const cplx w(p.x, p.y);
    Eigen::Matrix2cd phi = Eigen::Matrix2cd::Zero();
    phi(0, 0) = std::conj(w) / rho;
    phi(1, 1) = w / rho;
    return phi;
}

Eigen::Matrix2cd hopf_projector(const R3Point& p) {
    const double r = p.r();
    if (r == 0.0) throw std::invalid_argument("hopf_projector: the origin is excluded");
    Eigen::Matrix2cd m;
    m << r + p.z, cplx(p.x, -p.y), cplx(p.x, p.y), r - p.z;
    return m / (2.0 * r);
}

Eigen::MatrixXcd cp_projector(const Eigen::VectorXcd& zeta) {
    const double n2 = zeta.squaredNorm();
    if (zeta.size() == 0 || n2 == 0.0) throw std::invalid_argument("cp_projector: zero vector");
    return zeta * zeta.adjoint() / n2;
}

Eigen::MatrixXcd cp_chart_projector(const std::vector<cplx>& local, int chart) {
    const int n = static_cast<int>(local.size());
    if (chart < 0 || chart > n) throw std::out_of_range("cp_chart_projector: chart index out of range");
    Eigen::VectorXcd zeta(n + 1);
    for (int i = 0, k = 0; i <= n; ++i) zeta(i) = i == chart ? cplx(1.0) : local[k++];
    return cp_projector(zeta);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

Eigen::VectorXcd classical_veronese(cplx z1, cplx z2, int n) {
    if (z1 == 0.0 && z2 == 0.0) throw std::invalid_argument("classical_veronese: (0, 0) is not a point of CP^1");
    if (n < 1) throw std::invalid_argument("classical_veronese: degree must be >= 1");
    Eigen::VectorXcd v(n + 1);
    for (int j = 0; j <= n; ++j) v(j) = std::sqrt(binomial(n, j)) * std::pow(z1, n - j) * std::pow(z2, j);
    return v;
}

std::vector<cplx> local_veronese(cplx z, int n) {
    std::vector<cplx> out;
    for (int j = 1; j <= n; ++j) out.push_back(std::sqrt(binomial(n, j)) * std::pow(z, j));
    return out;
}

ClassicalTargets classical_targets(const R3Point& p, double sigma) {
    const double r = p.r();
    const double s = r + p.z;
    if (s < sigma * r) throw ChartDomainError("classical_targets: r + z = 0");
    ClassicalTargets t;
    t.z_c = cplx(p.x, p.y) / s;
    const Eigen::Matrix2cd u = chart_unitary(p, ChartLabel::I, sigma);
    t.z1 = u(0, 0);
    t.z2 = u(1, 0);
    t.su2 = u;
    const auto a = spin::SU2Element::make(t.z1, t.z2, 1e-10);
    t.phi_one = spin::spin_rep(a, spin::Spin::One);
    t.phi_three_halves = spin::spin_rep(a, spin::Spin::ThreeHalves);
    return t;
}

R3Point random_point(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> logr(std::log(0.1), std::log(10.0));
    double x, y, z, n;
    do {
        x = gauss(rng);
        y = gauss(rng);
        z = gauss(rng);
        n = std::sqrt(x * x + y * y + z * z);
    } while (n < 1e-8);
    const double r = std::exp(logr(rng));
    return R3Point{r * x / n, r * y / n, r * z / n};
}

VerificationReport classical_report(std::uint64_t seed, int count, double tol) {
    VerificationReport rep;
    rep.suite = "classical";
    rep.parameters = {{"seed", seed}, {"points", count}, {"tol", tol}};
    std::mt19937_64 rng(seed);
    double recon[2] = {0, 0}, unit[2] = {0, 0}, push[2] = {0, 0};
    int used[2] = {0, 0};
    double glue = 0, proj = 0, stereo = 0, scale = 0;
    int glued = 0;
    const Eigen::Matrix2cd e11 = (Eigen::Matrix2cd() << 1, 0, 0, 0).finished();
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < count; ++i) {
        const R3Point p = random_point(rng);
        const double r = p.r();
        const Eigen::Matrix2cd h = berry_h(p);
        const Eigen::Matrix2cd pr = hopf_projector(p);
        proj = std::max(proj, max_abs(pr * pr - pr));
        proj = std::max(proj, max_abs(pr.adjoint() - pr));
        proj = std::max(proj, std::abs(pr.trace() - 1.0));
        Eigen::Matrix2cd u[2];
        bool ok[2] = {false, false};
        for (int c = 0; c < 2; ++c) {
            const ChartLabel label = c == 0 ? ChartLabel::I : ChartLabel::II;
            try {
                u[c] = chart_unitary(p, label);
            } catch (const ChartDomainError&) {
                continue;
            }
            ok[c] = true;
            ++used[c];
            const Eigen::Matrix2cd d = (Eigen::Matrix2cd() << r, 0, 0, -r).finished();
            // relative to |H| = r
            recon[c] = std::max(recon[c], max_abs(u[c] * d * u[c].adjoint() - h) / r);
            unit[c] = std::max(unit[c], max_abs(u[c].adjoint() * u[c] - Eigen::Matrix2cd::Identity()));
            push[c] = std::max(push[c], max_abs(u[c] * e11 * u[c].adjoint() - pr));
        }
        if (ok[0] && ok[1] && std::hypot(p.x, p.y) > kDefaultSigma * r) {
            glue = std::max(glue, max_abs(u[0] * transition_fn(p) - u[1]));
            ++glued;
        }
        if (ok[0]) {
            const ClassicalTargets t = classical_targets(p);
            stereo = std::max(stereo, std::abs(std::norm(t.z_c) - (r - p.z) / (r + p.z)) / (1.0 + std::norm(t.z_c)));
        }
        Eigen::VectorXcd zeta(3);
        for (int k = 0; k < 3; ++k) zeta(k) = cplx(gauss(rng), gauss(rng));
        const cplx lambda(gauss(rng), gauss(rng));
        scale = std::max(scale, max_abs(cp_projector(lambda * zeta) - cp_projector(zeta)));
    }
    for (int c = 0; c < 2; ++c) {
        const std::string tag = c == 0 ? "_I" : "_II";
        auto rec = numeric_record("reconstruction" + tag, "U diag(r,-r) U^dagger = H_B", recon[c], tol);
        rec.details["points"] = used[c];
        rep.add(rec);
        rep.add(numeric_record("unitary" + tag, "U^dagger U = 1", unit[c], tol));
        rep.add(numeric_record("projector_pushforward" + tag, "P = U diag(1,0) U^dagger", push[c], tol));
    }
    auto g = numeric_record("gluing", "U_II = U_I Phi", glue, tol);
    g.details["points"] = glued;
    rep.add(g);
    rep.add(numeric_record("hopf_projector", "P^2 = P, P^dagger = P, tr P = 1", proj, tol));
    rep.add(numeric_record("stereographic", "|Z_c|^2 = (r - z)/(r + z)", stereo, tol));
    rep.add(numeric_record("cp_scale_invariance", "P(lambda zeta) = P(zeta)", scale, tol));

    // Spot values of the displayed chart projectors.
    {
        const cplx z(1.0, 1.0);
        Eigen::Matrix2cd disp;
        disp << 1.0, std::conj(z), z, std::norm(z);
        disp /= 1.0 + std::norm(z);
        const cplx w(0.5, -2.0);
        Eigen::Matrix2cd disp_w;
        disp_w << std::norm(w), w, std::conj(w), 1.0;
        disp_w /= std::norm(w) + 1.0;
        const double dev = std::max(max_abs(cp_chart_projector({z}, 0) - disp), max_abs(cp_chart_projector({w}, 1) - disp_w));
        rep.add(numeric_record("cp1_charts", "P(z) = (1 + |z|^2)^{-1} [[1, conj z], [z, |z|^2]]", dev, tol));
    }
    {
        const cplx w1(1.0), w2(2.0);
        Eigen::Matrix3cd disp;
        disp << std::norm(w1), w1, w1 * std::conj(w2), std::conj(w1), 1.0, std::conj(w2), w2 * std::conj(w1), w2,
            std::norm(w2);
        disp /= std::norm(w1) + 1.0 + std::norm(w2);
        const cplx z1(0.3, 0.4), z2(-1.0, 0.2);
        Eigen::Matrix3cd disp0;
        disp0 << 1.0, std::conj(z1), std::conj(z2), z1, std::norm(z1), z1 * std::conj(z2), z2, z2 * std::conj(z1),
            std::norm(z2);
        disp0 /= 1.0 + std::norm(z1) + std::norm(z2);
        const cplx v1(2.0, -1.0), v2(0.0, 0.5);
        Eigen::Matrix3cd disp2;
        disp2 << std::norm(v1), v1 * std::conj(v2), v1, v2 * std::conj(v1), std::norm(v2), v2, std::conj(v1),
            std::conj(v2), 1.0;
        disp2 /= std::norm(v1) + std::norm(v2) + 1.0;
        const double dev = std::max({max_abs(cp_chart_projector({w1, w2}, 1) - disp),
                                     max_abs(cp_chart_projector({z1, z2}, 0) - disp0),
                                     max_abs(cp_chart_projector({v1, v2}, 2) - disp2)});
        rep.add(numeric_record("cp2_charts", "P(w1,w2) on U_1 at (1, 2) and the U_0, U_2 layouts", dev, tol));
    }
    return rep;
}

}  // namespace fockbundle::berry
