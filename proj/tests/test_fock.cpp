#include <doctest.h>

#include <random>

#include "fockbundle/fock.hpp"
#include "oracles.hpp"

using namespace fockbundle;

namespace {

// Random operator mixing ladder moves and a few functions of N.
FockOperator random_op(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    const FockOperator a = FockOperator::annihilation();
    const FockOperator ad = FockOperator::creation();
    const FockOperator f = FockOperator::diagonal(sqrt(Symbol::number(2) + Symbol(g(rng) * g(rng))));
    FockOperator out = cplx(g(rng), g(rng)) * FockOperator::identity();
    out += cplx(g(rng), g(rng)) * a;
    out += cplx(g(rng), g(rng)) * (ad * f);
    out += cplx(g(rng), g(rng)) * (a * a * f);
    return out;
}

// entries reach ~1e7 on the n <= 32 grid, so the bound is relative to the largest one
double scale(const FockOperator& op, long n_max) {
    double s = 1.0;
    for (long n = 0; n <= n_max; ++n)
        if (auto col = op.column(n))
            for (const auto& [m, v] : col->coeffs()) s = std::max(s, std::abs(v));
    return s;
}

}  // namespace

TEST_CASE("ladder action follows the sqrt(n) convention") {
    const FockOperator a = FockOperator::annihilation();
    const FockOperator ad = FockOperator::creation();
    for (long n = 0; n < 20; ++n) {
        if (n > 0) CHECK(a.matrix_element(n - 1, n).real() == doctest::Approx(std::sqrt(double(n))));
        CHECK(ad.matrix_element(n + 1, n).real() == doctest::Approx(std::sqrt(double(n + 1))));
    }
    CHECK(a.column(0)->empty());
}

TEST_CASE("canonical commutator is exactly one") {
    const FockOperator a = FockOperator::annihilation();
    const FockOperator ad = FockOperator::creation();
    const EqualityReport r = op_equal(a * ad - ad * a, FockOperator::identity(), 200, 0.0);
    CHECK(r.pass);
    CHECK(r.max_deviation == 0.0);
}

TEST_CASE("products agree with truncated dense matrices") {
    const int d = 24;
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const FockOperator x = random_op(rng);
        const FockOperator y = random_op(rng);
        const Eigen::MatrixXcd dx = oracle::dense(x, d + 4);
        const Eigen::MatrixXcd dy = oracle::dense(y, d + 4);
        const Eigen::MatrixXcd ref = (dx * dy).topLeftCorner(d, d);
        const Eigen::MatrixXcd got = oracle::dense(x * y, d);
        CHECK((ref - got).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("property: associativity and adjoint rules on random triples") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::mt19937_64 rng(seed);
        const FockOperator x = random_op(rng), y = random_op(rng), z = random_op(rng);
        const FockOperator xyz = (x * y) * z;
        CHECK(op_equal(xyz, x * (y * z), 32, 1e-12 * scale(xyz, 32)).pass);
        CHECK(op_equal((x * y).adjoint(), y.adjoint() * x.adjoint(), 32, 1e-12 * scale(x * y, 34)).pass);
        CHECK(op_equal(x.adjoint().adjoint(), x, 32, 0.0).pass);
    }
}

TEST_CASE("adjoint matches the dense conjugate transpose") {
    std::mt19937_64 rng(5);
    const FockOperator x = random_op(rng);
    const int d = 20;
    const Eigen::MatrixXcd ref = oracle::dense(x, d + 3).adjoint().topLeftCorner(d, d);
    CHECK((oracle::dense(x.adjoint(), d) - ref).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("N^{-1/2} is singular only on the vacuum, and the singularity survives composition") {
    const FockOperator inv = FockOperator::diagonal(divide(Symbol(1.0), sqrt(Symbol::count(0))));
    CHECK(inv.singular_support(30) == std::set<long>{0});
    const FockOperator a_inv = FockOperator::annihilation() * inv;
    CHECK(a_inv.is_singular_at(0));
    CHECK_FALSE(a_inv.is_singular_at(1));
    // a N^{-1/2} |1> = |0>
    CHECK(std::abs(a_inv.matrix_element(0, 1) - 1.0) < 1e-15);
    CHECK_THROWS_AS(a_inv.matrix_element(0, 0), DomainError);
}

TEST_CASE("property: singular support only grows with the grid") {
    const double theta = -0.5;
    const FockOperator r = FockOperator::diagonal(sqrt(Symbol::count(0) + Symbol(theta * theta)));
    const FockOperator op = inverse(r + FockOperator::scalar(theta), sigma_for(theta));
    std::set<long> prev;
    for (long n = 0; n <= 40; n += 5) {
        const auto s = op.singular_support(n);
        CHECK(std::includes(s.begin(), s.end(), prev.begin(), prev.end()));
        prev = s;
    }
    CHECK(prev == std::set<long>{0});
}

TEST_CASE("inverse and sqrt refuse operators that shift") {
    CHECK_THROWS_AS(inverse(FockOperator::annihilation()), AlgebraError);
    CHECK_THROWS_AS(sqrt(FockOperator::creation()), AlgebraError);
}

TEST_CASE("sinc is smooth through zero") {
    CHECK(sinc_value(0.0).real() == doctest::Approx(1.0));
    for (double x : {1e-9, 1e-4, 9.9e-3, 1.01e-2, 0.5}) {
        CHECK(std::abs(sinc_value(x) - std::sin(x) / x) < 1e-15);
    }
}
