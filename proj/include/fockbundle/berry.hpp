#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fockbundle/chart_label.hpp"
#include "fockbundle/report.hpp"
#include "fockbundle/symbol.hpp"

namespace fockbundle::berry {

/// A classical point lies on a chart's Dirac string (or the transition
/// function's z-axis).
class ChartDomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

struct R3Point {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    /// Rejects the origin with std::invalid_argument.
    static R3Point make(double x, double y, double z);
    double r() const;
};

/// [[z, x - iy], [x + iy, -z]].
Eigen::Matrix2cd berry_h(const R3Point& p);

/// U_I (prefactor 1/sqrt(2r(r+z))) or U_II (1/sqrt(2r(r-z))). A point with
/// r + z (resp. r - z) below sigma * r is treated as on the string.
Eigen::Matrix2cd chart_unitary(const R3Point& p, ChartLabel label, double sigma = kDefaultSigma);

/// diag(x - iy, x + iy) / sqrt(x^2 + y^2). Throws ChartDomainError on the z-axis.
Eigen::Matrix2cd transition_fn(const R3Point& p, double sigma = kDefaultSigma);

/// (1/2r) [[r + z, x - iy], [x + iy, r - z]], defined for every r > 0.
Eigen::Matrix2cd hopf_projector(const R3Point& p);

/// |zeta><zeta| / <zeta|zeta>. Rejects the zero vector.
Eigen::MatrixXcd cp_projector(const Eigen::VectorXcd& zeta);

/// Projector in the local chart U_k of CP^n: inserts 1 at position k among the
/// n local coordinates.
Eigen::MatrixXcd cp_chart_projector(const std::vector<cplx>& local, int chart);

/// sqrt(C(n,j)) z1^{n-j} z2^j for j = 0..n. Rejects (0, 0).
Eigen::VectorXcd classical_veronese(cplx z1, cplx z2, int n);

/// (sqrt(C(n,1)) z, ..., z^n): the local Veronese components after factoring z1^n.
std::vector<cplx> local_veronese(cplx z, int n);

double binomial(int n, int k);

struct ClassicalTargets {
    cplx z_c;             // (x + iy) / (r + z)
    cplx z1, z2;          // first column of U_I
    Eigen::Matrix2cd su2; // U_I as an SU(2) element [[z1, -conj(z2)], [z2, conj(z1)]]
    Eigen::MatrixXcd phi_one;
    Eigen::MatrixXcd phi_three_halves;
};

/// Throws ChartDomainError when r + z is below sigma * r.
ClassicalTargets classical_targets(const R3Point& p, double sigma = kDefaultSigma);

/// Direction uniform on the sphere, radius log-uniform in [0.1, 10].
R3Point random_point(std::mt19937_64& rng);

/// Reconstruction, unitarity, gluing and projector identities at seeded random
/// points plus fixed CP^1/CP^2 spot values.
VerificationReport classical_report(std::uint64_t seed, int count, double tol);

}  // namespace fockbundle::berry
