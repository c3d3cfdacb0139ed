#include <doctest.h>

#include <random>

#include "fockbundle/spinrep.hpp"
#include "fockbundle/veronese.hpp"
#include "oracles.hpp"

using namespace fockbundle;
using namespace fockbundle::spin;

TEST_CASE("spin matrices equal the symmetric tensor power") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const SU2Element a = random_su2(rng);
        for (auto [j, two_j] : {std::pair{Spin::Half, 1}, {Spin::One, 2}, {Spin::ThreeHalves, 3}}) {
            const Eigen::MatrixXcd ref = oracle::symmetric_power(a.matrix(), two_j);
            CHECK((spin_rep(a, j) - ref).cwiseAbs().maxCoeff() < 1e-13);
        }
    }
}

TEST_CASE("property: homomorphism and unitarity on random pairs") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 100; ++trial) {
        const SU2Element a = random_su2(rng), b = random_su2(rng);
        for (Spin j : {Spin::Half, Spin::One, Spin::ThreeHalves}) {
            const Eigen::MatrixXcd pa = spin_rep(a, j), pb = spin_rep(b, j);
            const int d = dimension(j);
            CHECK((spin_rep(a * b, j) - pa * pb).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK((pa.adjoint() * pa - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("random SU(2) draws have unit determinant") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) CHECK(std::abs(random_su2(rng).matrix().determinant() - 1.0) < 1e-13);
    CHECK_THROWS(SU2Element::make(1.0, 1.0));
}

TEST_CASE("Clebsch-Gordan matrices are orthogonal and decompose products") {
    CHECK((cg_t4().transpose() * cg_t4() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((cg_t8().transpose() * cg_t8() - Eigen::Matrix<double, 8, 8>::Identity()).cwiseAbs().maxCoeff() <= 1e-15);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const SU2Element a = random_su2(rng);
        CHECK(cg_decompose_pair(a).pass);
        CHECK(cg_decompose_triple(a).pass);
    }
}

TEST_CASE("non-commutative spin candidates pass unitarity, first column and projector") {
    for (double theta : {0.5, 1.0, 2.0}) {
        CHECK(nc_spin_report(theta, Spin::One, 32, 1e-10).pass());
        CHECK(nc_spin_report(theta, Spin::ThreeHalves, 32, 1e-10).pass());
    }
}

TEST_CASE("Phi_1(V) reduces to the classical matrix on constant entries") {
    // the first column is the degree-2 lift
    const OpMatrix phi = nc_spin_rep(1.0, Spin::One);
    const veronese::LiftedColumn l = veronese::lift(veronese::build_family(1.0, 2));
    CHECK(compare_on_grid(phi.block(0, 0, 3, 1), l.a, 32).max_deviation < 1e-14);
}

TEST_CASE("tensor product breakdown is nonzero for theta > 0 and absent at theta = 0") {
    for (double theta : {0.5, 1.0, 2.0}) {
        const VerificationReport r = tensor_breakdown_check(theta, 16);
        const CheckRecord* b = r.find("breakdown_nonzero");
        REQUIRE(b != nullptr);
        CHECK(b->max_deviation > 1e-8);
        CHECK(r.pass());
    }
    const VerificationReport z = tensor_breakdown_check(0.0, 16);
    CHECK(z.find("breakdown_absent_theta0") != nullptr);
    CHECK(z.pass());
}

TEST_CASE("spin parsing") {
    CHECK(parse_spin("1/2") == Spin::Half);
    CHECK(parse_spin("3/2") == Spin::ThreeHalves);
    CHECK_THROWS(parse_spin("2"));
}
