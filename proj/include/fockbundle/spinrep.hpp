#pragma once

#include <random>
#include <string>

#include <Eigen/Dense>

#include "fockbundle/opmatrix.hpp"
#include "fockbundle/report.hpp"

namespace fockbundle::spin {

enum class Spin { Half, One, ThreeHalves };

int dimension(Spin j);
std::string to_string(Spin j);
/// Parses "1/2", "1", "3/2" (also "0.5", "1.5").
Spin parse_spin(const std::string& s);

/// [[alpha, -conj(beta)], [beta, conj(alpha)]] with |alpha|^2 + |beta|^2 = 1.
struct SU2Element {
    cplx alpha{1.0, 0.0};
    cplx beta{0.0, 0.0};

    /// Throws std::invalid_argument unless | |alpha|^2 + |beta|^2 - 1 | <= tol.
    static SU2Element make(cplx alpha, cplx beta, double tol = 1e-12);
    static SU2Element identity() { return {}; }
    Eigen::Matrix2cd matrix() const;
};

SU2Element operator*(const SU2Element& a, const SU2Element& b);

/// Complex Gaussian 2x2, first column normalized, second fixed by det = 1.
SU2Element random_su2(std::mt19937_64& rng);

/// phi_{1/2}(A) = A, phi_1(A) (3x3), phi_{3/2}(A) (4x4).
Eigen::MatrixXcd spin_rep(const SU2Element& a, Spin j);

Eigen::Matrix4d cg_t4();
Eigen::Matrix<double, 8, 8> cg_t8();

/// T4^dagger (A x A) T4 = diag(1, phi_1(A)).
CheckRecord cg_decompose_pair(const SU2Element& a, double tol = 1e-12);
/// T8^dagger (A x A x A) T8 = diag(A, A, phi_{3/2}(A)).
CheckRecord cg_decompose_triple(const SU2Element& a, double tol = 1e-12);

/// Unitarity and homomorphism of phi_j on seeded random pairs, T4/T8
/// orthonormality and decompositions.
VerificationReport classical_spin_report(std::uint64_t seed, int pairs, double tol);

/// V = [[X_0, -Y_0^dagger], [Y_0, X_{-1}]].
OpMatrix nc_v(double theta);
/// Phi_1(V) or Phi_{3/2}(V) with the ordered products entered as displayed;
/// Spin::Half returns V.
OpMatrix nc_spin_rep(double theta, Spin j);

/// Unitarity, first column = A_{2j}, Phi_j diag(1,0,..) Phi_j^dagger = P_{2j}.
/// These are the candidate predicates for any Phi_j.
VerificationReport nc_candidate_report(const OpMatrix& phi, double theta, int two_j, long n_max, double tol);
VerificationReport nc_spin_report(double theta, Spin j, long n_max, double tol);

/// V (x) V entered entry by entry in displayed form.
OpMatrix vv_displayed(double theta);

/// T4^dagger (V x V) T4 - diag(1, Phi_1(V)): passes when the maximal element
/// exceeds the threshold (at theta = 0 it vanishes off the vacuum and that is
/// checked instead). Also checks the V x V layout and a scalar control.
VerificationReport tensor_breakdown_check(double theta, long n_max, double threshold = 1e-8,
                                          double layout_tol = 1e-12, std::uint64_t control_seed = 7);

}  // namespace fockbundle::spin
