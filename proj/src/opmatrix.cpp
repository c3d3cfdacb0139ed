#include "fockbundle/opmatrix.hpp"

#include <chrono>
#include <stdexcept>

namespace fockbundle {

StackedState StackedState::basis(int slots, int slot, long n, cplx amplitude) {
    StackedState s;
    s.components.resize(slots);
    s.components.at(slot).add(n, amplitude);
    return s;
}

double StackedState::norm2() const {
    double s = 0.0;
    for (const auto& c : components) s += c.norm2();
    return s;
}

double StackedState::max_abs_diff(const StackedState& other) const {
    if (components.size() != other.components.size())
        throw std::invalid_argument("StackedState: component count mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < components.size(); ++i)
        d = std::max(d, components[i].max_abs_diff(other.components[i]));
    return d;
}

OpMatrix::OpMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(std::size_t(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("OpMatrix: dimensions must be positive");
}

std::size_t OpMatrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("OpMatrix: index out of range");
    return std::size_t(i) * cols_ + j;
}

OpMatrix OpMatrix::identity(int k) {
    OpMatrix m(k, k);
    for (int i = 0; i < k; ++i) m(i, i) = FockOperator::identity();
    return m;
}

OpMatrix OpMatrix::diag(const std::vector<FockOperator>& entries) {
    const int k = static_cast<int>(entries.size());
    OpMatrix m(k, k);
    for (int i = 0; i < k; ++i) m(i, i) = entries[i];
    return m;
}

OpMatrix OpMatrix::from_rows(std::initializer_list<std::initializer_list<FockOperator>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    OpMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("OpMatrix: ragged rows");
        int j = 0;
        for (const auto& e : row) m(i, j++) = e;
        ++i;
    }
    return m;
}

OpMatrix OpMatrix::constant(const Eigen::MatrixXcd& src) {
    OpMatrix m(static_cast<int>(src.rows()), static_cast<int>(src.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = FockOperator::scalar(src(i, j));
    return m;
}

OpMatrix OpMatrix::column_of(const std::vector<FockOperator>& entries) {
    OpMatrix m(static_cast<int>(entries.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m(i, 0) = entries[i];
    return m;
}

OpMatrix OpMatrix::adjoint() const {
    OpMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).adjoint();
    return out;
}

OpMatrix OpMatrix::block(int r0, int c0, int nr, int nc) const {
    OpMatrix out(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

bool OpMatrix::is_diagonal_entries() const {
    for (const auto& e : entries_)
        if (!e.is_diagonal()) return false;
    return true;
}

std::optional<StackedState> OpMatrix::column(int col, long n) const {
    StackedState out;
    out.components.resize(rows_);
    for (int i = 0; i < rows_; ++i) {
        auto c = (*this)(i, col).column(n);
        if (!c) return std::nullopt;
        out.components[i] = std::move(*c);
    }
    return out;
}

SlotStates OpMatrix::singular_support(long n_max) const {
    SlotStates out;
    for (int j = 0; j < cols_; ++j)
        for (long n = 0; n <= n_max; ++n)
            if (!column(j, n)) out[j + 1].insert(n);
    return out;
}

OpMatrix& OpMatrix::operator+=(const OpMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("OpMatrix: shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

OpMatrix& OpMatrix::operator-=(const OpMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("OpMatrix: shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

OpMatrix operator*(cplx s, const OpMatrix& a) {
    OpMatrix out = a;
    for (auto& e : out.entries_) e = s * e;
    return out;
}

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: dimension mismatch (" + std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    OpMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < b.cols(); ++k) {
            FockOperator acc;
            for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, k);
            out(i, k) = acc;
        }
    return out;
}

OpMatrix matmul(const OpMatrix& a, const OpMatrix& b) { return a * b; }

OpMatrix adjoint(const OpMatrix& m) { return m.adjoint(); }

OpMatrix kron(const OpMatrix& a, const OpMatrix& b) {
    OpMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < b.rows(); ++k)
            for (int j = 0; j < a.cols(); ++j)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

StackedState apply_matrix(const OpMatrix& m, const StackedState& s) {
    if (static_cast<int>(s.components.size()) != m.cols())
        throw std::invalid_argument("apply_matrix: component count does not match column count");
    StackedState out;
    out.components.resize(m.rows());
    SlotStates bad;
    for (int j = 0; j < m.cols(); ++j) {
        for (const auto& [n, amp] : s.components[j].coeffs()) {
            auto col = m.column(j, n);
            if (!col) {
                bad[j + 1].insert(n);
                continue;
            }
            for (int i = 0; i < m.rows(); ++i) out.components[i] += amp * col->components[i];
        }
    }
    if (!bad.empty()) throw DomainError(std::move(bad));
    return out;
}

GridComparison compare_on_grid(const OpMatrix& a, const OpMatrix& b, long n_max) {
    return compare_on_grid(a, b, n_max, SlotStates{});
}

GridComparison compare_on_grid(const OpMatrix& a, const OpMatrix& b, long n_max, const SlotStates& skip) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("compare_on_grid: shape mismatch");
    GridComparison cmp;
    for (int j = 0; j < a.cols(); ++j) {
        const auto sk = skip.find(j + 1);
        for (long n = 0; n <= n_max; ++n) {
            if (sk != skip.end() && sk->second.count(n)) continue;
            auto ca = a.column(j, n);
            auto cb = b.column(j, n);
            if (!ca || !cb) {
                cmp.excluded[j + 1].insert(n);
                continue;
            }
            for (int i = 0; i < a.rows(); ++i) {
                const FockVector& va = ca->components[i];
                const FockVector& vb = cb->components[i];
                auto consider = [&](long m, double dev) {
                    if (dev > cmp.max_deviation) {
                        cmp.max_deviation = dev;
                        cmp.arg_row = i + 1;
                        cmp.arg_col = j + 1;
                        cmp.arg_m = m;
                        cmp.arg_n = n;
                    }
                };
                for (const auto& [m, v] : va.coeffs()) consider(m, std::abs(v - vb[m]));
                for (const auto& [m, v] : vb.coeffs())
                    if (!va.coeffs().count(m)) consider(m, std::abs(v));
            }
        }
    }
    return cmp;
}

json grid_location(const GridComparison& cmp) {
    if (cmp.arg_row < 0) return nullptr;
    return json{{"row_slot", cmp.arg_row}, {"col_slot", cmp.arg_col}, {"m", cmp.arg_m}, {"n", cmp.arg_n}};
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void merge(SlotStates& into, const SlotStates& from) {
    for (const auto& [slot, set] : from) into[slot].insert(set.begin(), set.end());
}

}  // namespace

CheckRecord grid_check(std::string name, std::string anchor, const OpMatrix& lhs, const OpMatrix& rhs, long n_max,
                       double tol) {
    return grid_check(std::move(name), std::move(anchor), lhs, rhs, n_max, tol, SlotStates{});
}

CheckRecord grid_check(std::string name, std::string anchor, const OpMatrix& lhs, const OpMatrix& rhs, long n_max,
                       double tol, const SlotStates& skip) {
    const auto t0 = std::chrono::steady_clock::now();
    auto cmp = compare_on_grid(lhs, rhs, n_max, skip);
    CheckRecord rec;
    rec.name = std::move(name);
    rec.anchor = std::move(anchor);
    rec.max_deviation = cmp.max_deviation;
    rec.tolerance = tol;
    rec.pass = cmp.max_deviation <= tol;
    rec.excluded = cmp.excluded;
    rec.details["location"] = grid_location(cmp);
    rec.elapsed_ms = ms_since(t0);
    return rec;
}

CheckRecord check_unitary(const OpMatrix& m, long n_max, double tol) { return check_unitary(m, m.adjoint(), n_max, tol); }

CheckRecord check_unitary(const OpMatrix& m, const OpMatrix& md, long n_max, double tol) {
    if (m.rows() != m.cols() || md.rows() != m.cols() || md.cols() != m.rows())
        throw std::invalid_argument("check_unitary: matrix must be square");
    const auto t0 = std::chrono::steady_clock::now();
    const OpMatrix id = OpMatrix::identity(m.rows());
    auto left = compare_on_grid(md * m, id, n_max);
    auto right = compare_on_grid(m * md, id, n_max);
    CheckRecord rec;
    rec.name = "unitary";
    rec.anchor = "M^dagger M = M M^dagger = 1";
    rec.max_deviation = std::max(left.max_deviation, right.max_deviation);
    rec.tolerance = tol;
    rec.pass = rec.max_deviation <= tol;
    merge(rec.excluded, left.excluded);
    merge(rec.excluded, right.excluded);
    rec.details["MdM_deviation"] = left.max_deviation;
    rec.details["MMd_deviation"] = right.max_deviation;
    rec.details["location"] = grid_location(left.max_deviation >= right.max_deviation ? left : right);
    rec.elapsed_ms = ms_since(t0);
    return rec;
}

CheckRecord check_idempotent_hermitian(const OpMatrix& m, long n_max, double tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("check_idempotent_hermitian: matrix must be square");
    const auto t0 = std::chrono::steady_clock::now();
    auto idem = compare_on_grid(m * m, m, n_max);
    auto herm = compare_on_grid(m.adjoint(), m, n_max);
    CheckRecord rec;
    rec.name = "idempotent_hermitian";
    rec.anchor = "P^2 = P, P^dagger = P";
    rec.max_deviation = std::max(idem.max_deviation, herm.max_deviation);
    rec.tolerance = tol;
    rec.pass = rec.max_deviation <= tol;
    merge(rec.excluded, idem.excluded);
    merge(rec.excluded, herm.excluded);
    rec.details["idempotence_deviation"] = idem.max_deviation;
    rec.details["hermiticity_deviation"] = herm.max_deviation;
    rec.elapsed_ms = ms_since(t0);
    return rec;
}

}  // namespace fockbundle
