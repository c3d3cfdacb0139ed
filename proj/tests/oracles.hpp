#pragma once

// Dense truncated matrices and textbook formulas used as independent references.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "fockbundle/opmatrix.hpp"

namespace oracle {

using cplx = std::complex<double>;

// a on span{|0>..|d-1>}
inline Eigen::MatrixXcd lower(int d) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 1; n < d; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
    return m;
}

inline Eigen::MatrixXcd raise(int d) { return lower(d).adjoint(); }

// Truncated dense image of an operator matrix; slot-major blocks of size d.
inline Eigen::MatrixXcd dense(const fockbundle::OpMatrix& m, int d) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows() * d, m.cols() * d);
    for (int c = 0; c < m.cols(); ++c)
        for (long n = 0; n < d; ++n) {
            auto col = m.column(c, n);
            if (!col) continue;
            for (int s = 0; s < m.rows(); ++s)
                for (const auto& [k, v] : col->components[s].coeffs())
                    if (k < d) out(s * d + k, c * d + n) = v;
        }
    return out;
}

inline Eigen::MatrixXcd dense(const fockbundle::FockOperator& op, int d) {
    return dense(fockbundle::OpMatrix::diag({op}), d);
}

// H_JC truncated at d photons per slot, built from the dense ladder matrices.
inline Eigen::MatrixXcd h_jc(double theta, int d) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    h.topLeftCorner(d, d) = theta * Eigen::MatrixXcd::Identity(d, d);
    h.topRightCorner(d, d) = lower(d);
    h.bottomLeftCorner(d, d) = raise(d);
    h.bottomRightCorner(d, d) = -theta * Eigen::MatrixXcd::Identity(d, d);
    return h;
}

inline double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Spin-j matrix as the restriction of A^{(x)2j} to the symmetric subspace,
// basis e1^{2j-k} e2^k normalised.
inline Eigen::MatrixXcd symmetric_power(const Eigen::Matrix2cd& a, int two_j) {
    const int dim = 1 << two_j;
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Identity(1, 1);
    for (int i = 0; i < two_j; ++i) {
        Eigen::MatrixXcd next(big.rows() * 2, big.cols() * 2);
        for (int r = 0; r < big.rows(); ++r)
            for (int c = 0; c < big.cols(); ++c) next.block(r * 2, c * 2, 2, 2) = big(r, c) * a;
        big = next;
    }
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, two_j + 1);
    for (int idx = 0; idx < dim; ++idx) {
        int ones = 0;
        for (int b = 0; b < two_j; ++b) ones += (idx >> b) & 1;
        s(idx, ones) = 1.0;
    }
    for (int k = 0; k <= two_j; ++k) s.col(k) /= std::sqrt(binom(two_j, k));
    return s.adjoint() * big * s;
}

}  // namespace oracle
