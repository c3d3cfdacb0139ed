#include <doctest.h>

#include "fockbundle/jc_bundle.hpp"
#include "fockbundle/veronese.hpp"
#include "oracles.hpp"

using namespace fockbundle;
using namespace fockbundle::veronese;

TEST_CASE("X_{-j} coefficients match the closed formula") {
    for (double theta : {0.5, 2.0}) {
        for (int j = 0; j <= 3; ++j) {
            const Symbol x = x_symbol(theta, j);
            for (long n = j; n < 20; ++n) {
                const double r = std::sqrt(n + 1.0 - j + theta * theta);
                CHECK(x.eval(n)->real() == doctest::Approx((r + theta) / std::sqrt(2.0 * r * (r + theta))));
            }
        }
    }
}

TEST_CASE("sqrt((N-j)/N) vanishes at N = j and is singular below") {
    const FockOperator y2 = y_dagger_op(1.0, 2);
    // Y_{-2}^dagger = a sqrt((N-2)/N) ...: singular on |0>, |1>; zero on |2>
    CHECK(y2.is_singular_at(0));
    CHECK(y2.is_singular_at(1));
    CHECK_FALSE(y2.is_singular_at(2));
    CHECK(y2.column(2)->empty());
}

TEST_CASE("written-out adjoints agree with the generic adjoint away from the vacuum") {
    for (double theta : {-1.0, 0.5}) {
        for (int j = 0; j <= 3; ++j) {
            const EqualityReport r = op_equal(y_dagger_op(theta, j), y_op(theta, j).adjoint(), 30, 1e-14);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("the degree-1 lift is the first column of chart I") {
    for (double theta : {0.5, 1.0, 2.0}) {
        jc::JCParams p;
        p.theta = theta;
        const OpMatrix v = jc::build_chart(p, ChartLabel::I).unitary;
        const LiftedColumn l = lift(build_family(theta, 1));
        CHECK(compare_on_grid(l.a, v.block(0, 0, 2, 1), 40).max_deviation < 1e-14);
    }
}

TEST_CASE("A_n is an isometry against dense conjugate transposes") {
    const int d = 30;
    for (double theta : {0.5, 1.0, 2.0}) {
        for (int n = 1; n <= 5; ++n) {
            const LiftedColumn l = lift(build_family(theta, n));
            Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
            for (int j = 0; j <= n; ++j) {
                const Eigen::MatrixXcd e = oracle::dense(l.a(j, 0), d + n + 1);
                sum += (e.adjoint() * e).topLeftCorner(d, d);
            }
            CHECK((sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("Veronese reports pass for n <= 5") {
    for (double theta : {0.5, 1.0, 2.0}) {
        CHECK(useful_formulas_report(theta, 4, 40, 1e-10).pass());
        const VeroneseFamily fam = build_family(theta, 3);
        CHECK(commutation_check(fam, 1, 2, 40, 1e-10).pass);
        for (int n = 1; n <= 5; ++n) {
            const LiftedColumn l = lift(build_family(theta, n));
            CHECK(lift_report(l, 32, 1e-9).pass());
            CHECK(projector_report(l, 32, 1e-10).pass());
        }
    }
}

TEST_CASE("P_1 agrees with P_JC including the chart-I string for theta <= 0") {
    for (double theta : {-1.0, 0.0, 1.0}) {
        const LiftedColumn l = lift(build_family(theta, 1));
        jc::JCParams p;
        p.theta = theta;
        const GridComparison c = compare_on_grid(projector_pn(l), jc::projector_pjc(p), 40);
        CHECK(c.max_deviation < 1e-12);
        CHECK(c.excluded == (theta <= 0 ? SlotStates{{2, {0}}} : SlotStates{}));
    }
}

TEST_CASE("coherent expectations approach the classical local Veronese coordinates") {
    const VerificationReport r = classical_limit_report(1.0, 3);
    CHECK(r.pass());
    for (const auto& c : r.checks) CHECK(c.details["monotone"].get<bool>());
}

TEST_CASE("degree must be positive") { CHECK_THROWS_AS(build_family(1.0, 0), std::invalid_argument); }
