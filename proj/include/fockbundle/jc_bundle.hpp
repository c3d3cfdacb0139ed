#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fockbundle/chart_label.hpp"
#include "fockbundle/opmatrix.hpp"
#include "fockbundle/report.hpp"

namespace fockbundle::jc {

/// Parameters of the detuned Jaynes-Cummings model. theta is the detuning in
/// units of the coupling, (delta - omega) / (2 g).
struct JCParams {
    double theta = 0.0;
    double g = 1.0;
    std::optional<double> omega;
    std::optional<double> delta;
    double t = 0.0;

    /// Derives theta from the field frequency and the atomic splitting.
    static JCParams from_frequencies(double omega, double delta, double g, double t = 0.0);
    /// Throws std::invalid_argument when omega/delta disagree with theta or g == 0.
    void validate() const;
    double sigma() const { return sigma_for(theta); }
    double tau() const { return g * t; }
};

using fockbundle::ChartLabel;

/// R(N + shift) = sqrt(N + shift + theta^2); singular where N + shift < 0.
Symbol r_symbol(double theta, int shift);
FockOperator r_op(double theta, int shift);

/// [[theta, a], [a^dagger, -theta]].
OpMatrix build_h_jc(const JCParams& p);

struct QdmFactors {
    OpMatrix left;    // diag(1, a^dagger (N+1)^{-1/2})
    OpMatrix middle;  // [[theta, sqrt(N+1)], [sqrt(N+1), -theta]]
    OpMatrix right;   // diag(1, (N+1)^{-1/2} a)
};
QdmFactors qdm_factorization(const JCParams& p);
/// left * middle * right = H_JC away from slot-2 |0>, where a^dagger (N+1)^{-1} a
/// is 1 - |0><0| and the product leaves a residual of |theta|; the inserted
/// identity right * left = 1; and the size of that vacuum residual.
VerificationReport qdm_report(const JCParams& p, long n_max, double tol);

/// One local diagonalization H_JC = V D V^dagger.
struct BundleChart {
    ChartLabel label = ChartLabel::I;
    double theta = 0.0;
    OpMatrix unitary;        // normalization prefactor on the left
    OpMatrix unitary_right;  // same operator with the prefactor on the right
    OpMatrix adjoint;        // M^dagger diag(f), written out so singular prefactors stay visible
    OpMatrix diagonal;       // I: diag(R(N+1), -R(N)); II: diag(R(N), -R(N+1))

    /// States removed from the chart's domain: chart I drops slot-2 |0> for
    /// theta <= 0, chart II drops slot-1 |0> and slot-2 |0> for theta >= 0.
    bool claimed_singular(int slot, long n) const;
    SlotStates claimed_support(long n_max) const;
};
BundleChart build_chart(const JCParams& p, ChartLabel label);

/// Reconstruction of H_JC, agreement of the two orderings, unitarity.
VerificationReport chart_report(const BundleChart& chart, long n_max, double tol);

struct DiracStringMap {
    ChartLabel label = ChartLabel::I;
    double theta = 0.0;
    SlotStates unitary_support;  // singular inputs of V (both orderings)
    SlotStates adjoint_support;  // singular inputs of V^dagger (both orderings)
    SlotStates computed;         // union of the two
    SlotStates claimed;
    SlotStates missing;  // claimed but not computed
    SlotStates extra;    // computed but not claimed
    bool agree = false;
};
DiracStringMap dirac_string_map(const JCParams& p, ChartLabel label, long n_max);
json to_json(const DiracStringMap& map);

struct TransitionOperator {
    OpMatrix left_form;   // diag(a N^{-1/2}, N^{-1/2} a^dagger)
    OpMatrix right_form;  // diag((N+1)^{-1/2} a, a^dagger (N+1)^{-1/2})
    OpMatrix left_adjoint;  // diag(N^{-1/2} a^dagger, a N^{-1/2})
};
TransitionOperator transition_operator(const JCParams& p);
/// Singular inputs across both displayed forms: slot-1 |0> from N^{-1/2}.
SlotStates transition_claimed_support(long n_max);
/// Form agreement, unitarity away from the vacuum, and V_II = V_I Phi_JC.
VerificationReport transition_report(const JCParams& p, long n_max, double tol);

struct ProjectorForms {
    OpMatrix left_form;
    OpMatrix right_form;
};
ProjectorForms projector_forms(const JCParams& p);
OpMatrix projector_pjc(const JCParams& p);
/// P_JC is undefined only on slot-2 |0> at theta = 0.
SlotStates projector_claimed_support(double theta, long n_max);
VerificationReport projector_report(const JCParams& p, long n_max, double tol);

/// H_JC = D_R P - D_R (1 - P) with D_R = diag(R(N+1), R(N)).
CheckRecord spectral_decomposition_check(const JCParams& p, long n_max, double tol);
CheckRecord spectral_decomposition_check(const JCParams& p, const OpMatrix& projector, long n_max, double tol);

/// exp(-i g t H_JC) in closed form, sin(x)/R evaluated through sinc at R = 0.
OpMatrix propagator_closed_form(const JCParams& p);

/// Exact propagator assembled from the invariant blocks of H_JC: the 1x1 block
/// on slot-2 |0> and the 2x2 blocks span{(1,|n>), (2,|n+1>)}.
class BlockPropagator {
  public:
    explicit BlockPropagator(const JCParams& p);
    /// Image of the basis input (slot 0-based, |n>).
    StackedState column(int slot, long n) const;
    /// Eigenvalues of block n: -/+ sqrt(n + 1 + theta^2).
    std::pair<double, double> block_eigenvalues(long n) const;
    /// 2x2 propagator block n in the basis ((1,|n>), (2,|n+1>)).
    Eigen::Matrix2cd block(long n) const;
    cplx ground_phase() const;

  private:
    JCParams p_;
};
BlockPropagator propagator_block_oracle(const JCParams& p);
CheckRecord propagator_vs_oracle(const JCParams& p, long n_max, double tol);
/// U(t1) U(t2) = U(t1 + t2) on the grid.
CheckRecord propagator_semigroup(const JCParams& p, double t1, double t2, long n_max, double tol);

/// exp(-i t H_1) with H_1 = omega N + (omega/2) sigma_3: diagonal phases.
OpMatrix free_evolution(const JCParams& p);
/// exp(-i t H) = exp(-i t H_1) exp(-i t g H_JC). Requires omega and delta.
OpMatrix full_evolution(const JCParams& p);
/// Both orderings of the commuting split, unitarity, and the block oracle of the full H.
VerificationReport full_evolution_report(const JCParams& p, long n_max, double tol);

FockVector coherent_state(cplx alpha, double cutoff = 1e-16);
cplx expectation(const FockOperator& op, const FockVector& state);

struct CoherentSample {
    double radius = 0.0;
    cplx alpha;
    cplx expectation;
    cplx classical;
    double relative_error = 0.0;
    long support = 0;
};

struct LocalCoordinate {
    FockOperator z_left;   // (R(N) + theta)^{-1} a^dagger
    FockOperator z_right;  // a^dagger (R(N+1) + theta)^{-1}
    VerificationReport checks;
    std::vector<CoherentSample> samples;
    bool monotone = false;
};

/// The stereographic coordinate Z of the chart-I projector and its classical
/// limit. Throws DomainError when (R(N) + theta)^{-1} is singular (theta <= 0).
LocalCoordinate local_coordinate_z(const JCParams& p, long n_max, double tol,
                                   const std::vector<double>& radii = {2.0, 4.0, 8.0}, double phase = 0.3);

}  // namespace fockbundle::jc
