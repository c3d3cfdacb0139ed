#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "fockbundle/jc_bundle.hpp"
#include "oracles.hpp"

using namespace fockbundle;
using namespace fockbundle::jc;

namespace {

JCParams at(double theta, double g = 1.0, double t = 0.0) {
    JCParams p;
    p.theta = theta;
    p.g = g;
    p.t = t;
    return p;
}

Eigen::VectorXcd stacked(const StackedState& s, int d) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * d);
    for (int slot = 0; slot < 2; ++slot)
        for (const auto& [k, c] : s.components[slot].coeffs())
            if (k < d) v(slot * d + k) = c;
    return v;
}

}  // namespace

TEST_CASE("H_JC matches the dense ladder construction") {
    for (double theta : {-1.5, 0.0, 0.7}) {
        const int d = 16;
        CHECK((oracle::dense(build_h_jc(at(theta)), d) - oracle::h_jc(theta, d)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("chart columns are eigenvectors of the dense Hamiltonian") {
    const int d = 30;
    for (double theta : {-2.0, -0.5, 0.1, 1.0}) {
        const Eigen::MatrixXcd h = oracle::h_jc(theta, d);
        for (ChartLabel label : {ChartLabel::I, ChartLabel::II}) {
            const BundleChart c = build_chart(at(theta), label);
            for (long n = 0; n < d - 2; ++n) {
                // chart I: slot 1 -> +R(N+1), slot 2 -> -R(N); chart II: slot 1 -> +R(N), slot 2 -> -R(N+1)
                for (int slot = 0; slot < 2; ++slot) {
                    if (c.claimed_singular(slot + 1, n)) continue;
                    const auto col = c.unitary.column(slot, n);
                    REQUIRE(col.has_value());
                    const Eigen::VectorXcd v = stacked(*col, d);
                    const long k = (label == ChartLabel::I) == (slot == 0) ? n + 1 : n;
                    const double lambda = (slot == 0 ? 1.0 : -1.0) * std::sqrt(k + theta * theta);
                    CHECK((h * v - lambda * v).norm() < 1e-12);
                    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-13));
                }
            }
        }
    }
}

TEST_CASE("block eigenvalues agree with a dense eigensolver") {
    const double theta = 0.8;
    const BlockPropagator b(at(theta, 1.0, 1.0));
    for (long n = 0; n < 10; ++n) {
        Eigen::Matrix2d blk;
        blk << theta, std::sqrt(n + 1.0), std::sqrt(n + 1.0), -theta;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(blk);
        const auto [lo, hi] = b.block_eigenvalues(n);
        CHECK(lo == doctest::Approx(es.eigenvalues()(0)));
        CHECK(hi == doctest::Approx(es.eigenvalues()(1)));
    }
}

TEST_CASE("closed-form propagator equals the dense matrix exponential") {
    const int d = 34;
    for (double theta : {0.0, 0.5, 1.0}) {
        for (double gt : {0.5, 1.0, 3.141592653589793}) {
            const Eigen::MatrixXcd u = (cplx(0.0, -gt) * oracle::h_jc(theta, d)).exp();
            const OpMatrix closed = propagator_closed_form(at(theta, 1.0, gt));
            const Eigen::MatrixXcd got = oracle::dense(closed, d);
            double dev = 0.0;
            // the last block is cut by the truncation: compare columns n <= d - 2 only
            for (int slot = 0; slot < 2; ++slot)
                for (int n = 0; n <= d - 2; ++n)
                    dev = std::max(dev, (got.col(slot * d + n) - u.col(slot * d + n)).cwiseAbs().maxCoeff());
            CHECK(dev < 1e-9);
        }
    }
}

TEST_CASE("propagator checks pass on the grid") {
    const JCParams p = at(0.5, 1.0, 1.0);
    CHECK(propagator_vs_oracle(p, 32, 1e-9).pass);
    CHECK(propagator_semigroup(p, 0.4, 0.9, 32, 1e-9).pass);
    CHECK(check_unitary(propagator_closed_form(p), 32, 1e-9).pass);
}

TEST_CASE("Dirac strings match the claimed domains") {
    for (double theta : {-1.0, 0.0, 1.0}) {
        const DiracStringMap m1 = dirac_string_map(at(theta), ChartLabel::I, 48);
        const DiracStringMap m2 = dirac_string_map(at(theta), ChartLabel::II, 48);
        CHECK(m1.agree);
        CHECK(m2.agree);
        CHECK(m1.computed == (theta <= 0 ? SlotStates{{2, {0}}} : SlotStates{}));
        CHECK(m2.computed == (theta >= 0 ? SlotStates{{1, {0}}, {2, {0}}} : SlotStates{}));

        const ProjectorForms f = projector_forms(at(theta));
        SlotStates ps = f.left_form.singular_support(48);
        CHECK(ps == projector_claimed_support(theta, 48));
        CHECK(ps == (theta == 0.0 ? SlotStates{{2, {0}}} : SlotStates{}));

        const TransitionOperator t = transition_operator(at(theta));
        CHECK(t.left_form.singular_support(48) == SlotStates{{1, {0}}});
        CHECK(t.right_form.singular_support(48).empty());
    }
}

TEST_CASE("chart and projector reports pass for both signs of theta") {
    for (double theta : {-2.0, -0.5, 0.0, 0.1, 1.0}) {
        const JCParams p = at(theta);
        CHECK(chart_report(build_chart(p, ChartLabel::I), 40, 1e-10).pass());
        CHECK(chart_report(build_chart(p, ChartLabel::II), 40, 1e-10).pass());
        CHECK(transition_report(p, 40, 1e-10).pass());
        CHECK(projector_report(p, 40, 1e-10).pass());
        CHECK(spectral_decomposition_check(p, 40, 1e-10).pass);
    }
}

TEST_CASE("QDM factorization misses H_JC only on slot-2 vacuum, by |theta|") {
    for (double theta : {-1.5, 0.0, 0.5, 2.0}) {
        const JCParams p = at(theta);
        const QdmFactors f = qdm_factorization(p);
        const OpMatrix prod = f.left * f.middle * f.right;
        const auto col = prod.column(1, 0);
        REQUIRE(col.has_value());
        CHECK(col->components[1][0] == cplx(0.0, 0.0));  // H_JC gives -theta there
        CHECK(qdm_report(p, 40, 1e-10).pass());
    }
}

TEST_CASE("P_JC is the dense spectral projector on the positive eigenspace") {
    const int d = 20;
    for (double theta : {-0.7, 0.3, 1.5}) {
        const Eigen::MatrixXcd h = oracle::h_jc(theta, d);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        Eigen::MatrixXcd ref = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
        for (int k = 0; k < 2 * d; ++k)
            if (es.eigenvalues()(k) > 0.0) ref += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
        const Eigen::MatrixXcd p = oracle::dense(projector_pjc(at(theta)), d);
        double dev = 0.0;
        // slot-1 |d-1> pairs with the missing slot-2 |d>
        for (int j = 0; j < 2 * d; ++j)
            if (j != d - 1) dev = std::max(dev, (p.col(j) - ref.col(j)).cwiseAbs().maxCoeff());
        CHECK(dev < 1e-12);
    }
}

TEST_CASE("coherent state is normalised and an eigenvector of a") {
    const cplx alpha(1.3, -0.4);
    const FockVector s = coherent_state(alpha);
    CHECK(s.norm2() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(expectation(FockOperator::annihilation(), s) - alpha) < 1e-12);
    CHECK(std::abs(expectation(FockOperator::number(), s) - std::norm(alpha)) < 1e-11);
}

TEST_CASE("local coordinate needs theta > 0") {
    CHECK_THROWS_AS(local_coordinate_z(at(0.0), 20, 1e-10), DomainError);
    CHECK_THROWS_AS(local_coordinate_z(at(-1.0), 20, 1e-10), DomainError);
    const LocalCoordinate z = local_coordinate_z(at(1.0), 40, 1e-10);
    CHECK(z.checks.pass());
    CHECK(z.monotone);
}

TEST_CASE("theta from frequencies") {
    const JCParams p = JCParams::from_frequencies(1.0, 4.0, 0.5);
    CHECK(p.theta == doctest::Approx(3.0));
    JCParams bad = p;
    bad.theta = 1.0;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("full evolution factorises into commuting pieces") {
    JCParams p = JCParams::from_frequencies(1.0, 2.0, 1.0, 0.7);
    CHECK(full_evolution_report(p, 32, 1e-10).pass());
}
