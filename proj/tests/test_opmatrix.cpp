#include <doctest.h>

#include <random>

#include "fockbundle/opmatrix.hpp"
#include "oracles.hpp"

using namespace fockbundle;

namespace {

OpMatrix random_matrix(std::mt19937_64& rng, int r, int c) {
    std::normal_distribution<double> g;
    OpMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m(i, j) = cplx(g(rng), g(rng)) * FockOperator::annihilation() +
                      cplx(g(rng), g(rng)) * FockOperator::creation() + cplx(g(rng), 0.0) * FockOperator::identity();
    return m;
}

}  // namespace

TEST_CASE("property: (AB)^dagger = B^dagger A^dagger for operator matrices") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::mt19937_64 rng(seed);
        const OpMatrix a = random_matrix(rng, 2, 3);
        const OpMatrix b = random_matrix(rng, 3, 2);
        CHECK(compare_on_grid((a * b).adjoint(), b.adjoint() * a.adjoint(), 24).max_deviation < 1e-12);
    }
}

TEST_CASE("property: kron is associative") {
    std::mt19937_64 rng(3);
    const OpMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2), c = random_matrix(rng, 2, 2);
    CHECK(compare_on_grid(kron(kron(a, b), c), kron(a, kron(b, c)), 16).max_deviation < 1e-12);
}

TEST_CASE("kron of constants matches the Eigen Kronecker layout") {
    Eigen::Matrix2cd x, y;
    x << 1.0, 2.0, cplx(0, 1), -1.0;
    y << 0.5, -3.0, 4.0, cplx(2, 2);
    const OpMatrix k = kron(OpMatrix::constant(x), OpMatrix::constant(y));
    for (int i = 0; i < 2; ++i)
        for (int kk = 0; kk < 2; ++kk)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l)
                    CHECK(std::abs(k(2 * i + kk, 2 * j + l).matrix_element(3, 3) - x(i, j) * y(kk, l)) < 1e-15);
}

TEST_CASE("property: apply_matrix respects products") {
    std::mt19937_64 rng(8);
    const OpMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    for (int slot = 0; slot < 2; ++slot)
        for (long n = 0; n < 12; ++n) {
            const StackedState s = StackedState::basis(2, slot, n);
            CHECK(apply_matrix(a * b, s).max_abs_diff(apply_matrix(a, apply_matrix(b, s))) < 1e-12);
        }
}

TEST_CASE("grid comparison skips requested inputs and reports singular ones") {
    const FockOperator inv = FockOperator::diagonal(divide(Symbol(1.0), sqrt(Symbol::count(0))));
    const OpMatrix m = OpMatrix::diag({inv, FockOperator::identity()});
    const OpMatrix id = OpMatrix::identity(2);
    const GridComparison plain = compare_on_grid(m, id, 5);
    CHECK(plain.excluded == SlotStates{{1, {0}}});
    SlotStates skip{{1, {0}}};
    const GridComparison skipped = compare_on_grid(m, id, 5, skip);
    CHECK(skipped.excluded.empty());
    CHECK(skipped.max_deviation > 0.0);  // |2>: 1/sqrt(2) vs 1
}

TEST_CASE("check_unitary flags a non-unitary matrix") {
    const OpMatrix m = OpMatrix::diag({FockOperator::annihilation(), FockOperator::identity()});
    CHECK_FALSE(check_unitary(m, 10, 1e-10).pass);
    CHECK(check_unitary(OpMatrix::identity(3), 10, 0.0).pass);
}
