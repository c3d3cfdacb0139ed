#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fockbundle/fock.hpp"
#include "fockbundle/report.hpp"

namespace fockbundle {

/// A vector in C^k (x) F: one Fock vector per component slot.
struct StackedState {
    std::vector<FockVector> components;

    static StackedState basis(int slots, int slot, long n, cplx amplitude = 1.0);  // slot 0-based
    double norm2() const;
    double max_abs_diff(const StackedState& other) const;
};

/// Matrix with FockOperator entries. Products compose entries in order:
/// (AB)[i][k] = sum_j A[i][j] * B[j][k], left factor acting last.
class OpMatrix {
  public:
    OpMatrix() = default;
    OpMatrix(int rows, int cols);

    static OpMatrix identity(int k);
    static OpMatrix zero(int rows, int cols) { return OpMatrix(rows, cols); }
    static OpMatrix diag(const std::vector<FockOperator>& entries);
    static OpMatrix from_rows(std::initializer_list<std::initializer_list<FockOperator>> rows);
    /// Classical matrix: every entry a constant multiple of the identity.
    static OpMatrix constant(const Eigen::MatrixXcd& m);
    /// Column vector from a list of entries.
    static OpMatrix column_of(const std::vector<FockOperator>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FockOperator& operator()(int i, int j) { return entries_.at(index(i, j)); }
    const FockOperator& operator()(int i, int j) const { return entries_.at(index(i, j)); }

    OpMatrix adjoint() const;
    /// Sub-block [r0, r0+nr) x [c0, c0+nc).
    OpMatrix block(int r0, int c0, int nr, int nc) const;
    /// True when every entry has shift degree 0.
    bool is_diagonal_entries() const;

    /// Image of the basis state (input slot `col`, |n>), or std::nullopt when any
    /// entry of that column is singular at n. `col` is 0-based.
    std::optional<StackedState> column(int col, long n) const;
    /// Singular basis states per input slot (1-based slot keys) for n <= n_max.
    SlotStates singular_support(long n_max) const;

    OpMatrix& operator+=(const OpMatrix& other);
    OpMatrix& operator-=(const OpMatrix& other);
    friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) { return a += b; }
    friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) { return a -= b; }
    friend OpMatrix operator*(cplx s, const OpMatrix& a);
    friend OpMatrix operator*(const OpMatrix& a, const OpMatrix& b);

  private:
    std::size_t index(int i, int j) const;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<FockOperator> entries_;
};

OpMatrix matmul(const OpMatrix& a, const OpMatrix& b);
OpMatrix adjoint(const OpMatrix& m);
/// (A (x) B)[(i,k)][(j,l)] = A[i][j] * B[k][l], with A's entry composed on the left.
OpMatrix kron(const OpMatrix& a, const OpMatrix& b);

/// Componentwise application. Throws DomainError keyed by 1-based input slot.
StackedState apply_matrix(const OpMatrix& m, const StackedState& s);

/// Entrywise deviation of two equally shaped matrices over all basis inputs
/// (slot, |n>) with n <= n_max. Inputs singular for either side are skipped
/// and listed per slot.
struct GridComparison {
    double max_deviation = 0.0;
    int arg_row = -1;  // 1-based output slot
    int arg_col = -1;  // 1-based input slot
    long arg_m = -1;
    long arg_n = -1;
    SlotStates excluded;
};

GridComparison compare_on_grid(const OpMatrix& a, const OpMatrix& b, long n_max);
/// Same, but inputs listed in `skip` are left out without being recorded as excluded.
GridComparison compare_on_grid(const OpMatrix& a, const OpMatrix& b, long n_max, const SlotStates& skip);

/// Builds a check record from a grid comparison; pass iff deviation <= tol.
CheckRecord grid_check(std::string name, std::string anchor, const OpMatrix& lhs, const OpMatrix& rhs,
                       long n_max, double tol);
CheckRecord grid_check(std::string name, std::string anchor, const OpMatrix& lhs, const OpMatrix& rhs,
                       long n_max, double tol, const SlotStates& skip);

/// Max deviation of M^dagger M and M M^dagger from the identity.
CheckRecord check_unitary(const OpMatrix& m, long n_max, double tol);
/// Same with an explicitly written adjoint. The generic adjoint is zero on
/// states it maps below the vacuum, so it cannot see a singular factor there.
CheckRecord check_unitary(const OpMatrix& m, const OpMatrix& m_dagger, long n_max, double tol);
/// Max deviations of M^2 - M and M^dagger - M.
CheckRecord check_idempotent_hermitian(const OpMatrix& m, long n_max, double tol);

json grid_location(const GridComparison& cmp);

}  // namespace fockbundle
