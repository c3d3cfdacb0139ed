#pragma once

#include <vector>

#include "fockbundle/opmatrix.hpp"
#include "fockbundle/report.hpp"

namespace fockbundle::veronese {

/// X_{-j} = (R(N+1-j) + theta) / sqrt(2 R(N+1-j) (R(N+1-j) + theta)).
Symbol x_symbol(double theta, int j);
FockOperator x_op(double theta, int j);
/// Y_{-j} = sqrt((N-j)/N) (2 R(N-j) (R(N-j) + theta))^{-1/2} a^dagger. j may be
/// negative (Y_{+1} appears in the shift identity at j = 0). The root is omitted at j = 0.
FockOperator y_op(double theta, int j);
/// Z_{-j} = sqrt((N-j)/N) (R(N-j) + theta)^{-1} a^dagger.
FockOperator z_op(double theta, int j);
/// a times the (real) prefactor, i.e. Y_{-j}^dagger and Z_{-j}^dagger written out.
/// Unlike FockOperator::adjoint these are singular on |n> whenever the prefactor is.
FockOperator y_dagger_op(double theta, int j);
FockOperator z_dagger_op(double theta, int j);

struct VeroneseFamily {
    double theta = 0.0;
    int n = 1;
    std::vector<Symbol> x;        // X_{-j}, j = 0..n
    std::vector<FockOperator> xo; // same as operators
    std::vector<FockOperator> y;  // Y_{-j}, j = 0..n
    std::vector<FockOperator> z;  // Z_{-j}, j = 0..n
    std::vector<FockOperator> yd; // Y_{-j}^dagger, written out
    std::vector<FockOperator> zd; // Z_{-j}^dagger, written out
};

/// Throws std::invalid_argument for n < 1.
VeroneseFamily build_family(double theta, int n);

/// X_{-j}^2 + Y_{-j}^dagger Y_{-j} = 1 and Y_{-j}^dagger Y_{-j} = Y_{-j+1} Y_{-j+1}^dagger
/// for j = 0..j_max, plus Z_{-j} = Y_{-j} X_{-j}^{-1}.
VerificationReport useful_formulas_report(double theta, int j_max, long n_max, double tol);

/// Y_{-j} X_{-k}^{-1} = X_{-(k+1)}^{-1} Y_{-j}.
CheckRecord commutation_check(const VeroneseFamily& family, int j, int k, long n_max, double tol);

struct LiftedColumn {
    int n = 1;
    double theta = 0.0;
    OpMatrix a;  // (n+1) x 1
    OpMatrix z;  // n x 1
    OpMatrix a_dagger;  // 1 x (n+1), built from the written-out adjoints
    OpMatrix z_dagger;  // 1 x n
};

LiftedColumn lift(const VeroneseFamily& family);

/// A^dagger A = 1, A = (1; Z_n) (1 + Z_0^dagger Z_0)^{-n/2},
/// 1 + Z_n^dagger Z_n = (1 + Z_0^dagger Z_0)^n.
VerificationReport lift_report(const LiftedColumn& lifted, long n_max, double tol);

/// P_n = A_n A_n^dagger.
OpMatrix projector_pn(const LiftedColumn& lifted);
/// [[W, W Z^dagger], [Z W, Z W Z^dagger]] with W = (1 + Z^dagger Z)^{-1}.
OpMatrix oike_projector(const LiftedColumn& lifted);

/// Idempotence/hermiticity, P A = A, Oike layout, and (n = 1) agreement with P_JC.
VerificationReport projector_report(const LiftedColumn& lifted, long n_max, double tol);

/// Relative error of coherent expectations of the Z_n entries against
/// sqrt(C(n,j)) Z_c^j over the given radii; records whether each entry decays monotonically.
VerificationReport classical_limit_report(double theta, int n, const std::vector<double>& radii = {2.0, 4.0, 8.0},
                                          double phase = 0.3);

}  // namespace fockbundle::veronese
