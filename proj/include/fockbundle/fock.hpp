#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockbundle/symbol.hpp"

namespace fockbundle {

/// Basis indices grouped by component slot. Slots are 1-based; slot 0 is used
/// for a bare (unslotted) Fock-space operator.
using SlotStates = std::map<int, std::set<long>>;

std::string format_slot_states(const SlotStates& states);

/// Raised when an operator is applied to a basis state on which one of its
/// coefficients is singular. The offending states are the Dirac-string signal.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(SlotStates states);
    const SlotStates& states() const { return states_; }

  private:
    SlotStates states_;
};

/// Raised for algebraic requests outside the supported set, such as inverting
/// an operator that shifts the photon number.
class AlgebraError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Finite-support vector over the number basis |n>.
class FockVector {
  public:
    FockVector() = default;
    static FockVector basis(long n, cplx amplitude = 1.0);

    cplx operator[](long n) const;
    void add(long n, cplx amplitude);
    const std::map<long, cplx>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    double norm2() const;
    cplx inner(const FockVector& other) const;  // <this|other>
    /// Largest |this[n] - other[n]| over the union of supports.
    double max_abs_diff(const FockVector& other) const;

    FockVector& operator+=(const FockVector& other);
    FockVector& operator*=(cplx s);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator*(cplx s, FockVector v) { return v *= s; }

  private:
    std::map<long, cplx> coeffs_;
};

/// One weighted shift: T|n> = c(n) |n + degree>, and T|n> = 0 when n + degree < 0.
/// c(n) is still evaluated there so a singular inner factor is not hidden by the cut.
struct ShiftTerm {
    int degree = 0;
    Symbol coeff;
};

/// Finite sum of shift terms in normal form (one term per degree). Every
/// operator built from a, a^dagger and functions of N is exactly representable
/// and acts on basis states without truncation.
class FockOperator {
  public:
    FockOperator() = default;  // zero operator

    static FockOperator identity();
    static FockOperator scalar(cplx value);
    static FockOperator annihilation();  // a|n> = sqrt(n) |n-1>
    static FockOperator creation();      // a^dagger|n> = sqrt(n+1) |n+1>
    static FockOperator number();        // N = a^dagger a
    static FockOperator diagonal(const Symbol& f);
    static FockOperator shift(int degree, const Symbol& coeff);

    const std::map<int, Symbol>& terms() const { return terms_; }
    std::vector<ShiftTerm> term_list() const;
    bool is_zero() const { return terms_.empty(); }
    /// True when the only term (if any) has degree 0.
    bool is_diagonal() const;

    /// Exact action on |n>; std::nullopt when n is singular for this operator.
    std::optional<FockVector> column(long n) const;
    /// Sparse action on a vector. Throws DomainError on singular support points.
    FockVector apply(const FockVector& v) const;
    /// <m|op|n>. Throws DomainError when n is singular.
    cplx matrix_element(long m, long n) const;
    bool is_singular_at(long n) const;
    std::set<long> singular_support(long n_max) const;

    FockOperator adjoint() const;

    FockOperator& operator+=(const FockOperator& other);
    FockOperator& operator-=(const FockOperator& other);
    friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
    friend FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
    friend FockOperator operator-(const FockOperator& a);
    friend FockOperator operator*(cplx s, const FockOperator& a);
    /// Composition: (A * B)|n> = A(B|n>).
    friend FockOperator operator*(const FockOperator& a, const FockOperator& b);

  private:
    void add_term(int degree, const Symbol& coeff);
    std::map<int, Symbol> terms_;
};

FockOperator compose(const FockOperator& a, const FockOperator& b);
FockOperator adjoint(const FockOperator& op);

/// Pointwise functions of a degree-0 operator. Throw AlgebraError otherwise.
FockOperator inverse(const FockOperator& op, double sigma = kDefaultSigma);
FockOperator sqrt(const FockOperator& op, double sigma = kDefaultSigma);
FockOperator pow(const FockOperator& op, double exponent, double sigma = kDefaultSigma);
/// Integer power by repeated composition.
FockOperator power(const FockOperator& op, int exponent);

/// Result of comparing two operators on the grid m, n <= n_max.
struct EqualityReport {
    double max_deviation = 0.0;
    long arg_m = -1;
    long arg_n = -1;
    /// First grid point (column-major scan) whose deviation exceeds tol.
    long first_m = -1;
    long first_n = -1;
    double first_deviation = 0.0;
    std::set<long> excluded;
    double tolerance = 0.0;
    bool pass = false;
};

/// Max |<m|A - B|n>| over m, n <= n_max, skipping and listing columns n that
/// are singular for either side.
EqualityReport op_equal(const FockOperator& a, const FockOperator& b, long n_max, double tol);

}  // namespace fockbundle
