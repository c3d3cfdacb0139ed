#include "fockbundle/fock.hpp"

#include <cmath>
#include <sstream>

namespace fockbundle {

std::string format_slot_states(const SlotStates& states) {
    std::ostringstream os;
    os << '{';
    bool first_slot = true;
    for (const auto& [slot, set] : states) {
        if (set.empty()) continue;
        if (!first_slot) os << ", ";
        first_slot = false;
        if (slot > 0) os << "slot" << slot << ": ";
        os << '{';
        bool first = true;
        for (long n : set) {
            if (!first) os << ',';
            first = false;
            os << n;
        }
        os << '}';
    }
    os << '}';
    return os.str();
}

DomainError::DomainError(SlotStates states)
    : std::runtime_error("operator is singular on states " + format_slot_states(states)),
      states_(std::move(states)) {}

// ---------------------------------------------------------------- FockVector

FockVector FockVector::basis(long n, cplx amplitude) {
    FockVector v;
    v.add(n, amplitude);
    return v;
}

cplx FockVector::operator[](long n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? cplx{} : it->second;
}

void FockVector::add(long n, cplx amplitude) {
    if (n < 0) throw std::out_of_range("FockVector: negative basis index");
    coeffs_[n] += amplitude;
}

double FockVector::norm2() const {
    double s = 0.0;
    for (const auto& [n, c] : coeffs_) s += std::norm(c);
    return s;
}

cplx FockVector::inner(const FockVector& other) const {
    cplx s{};
    for (const auto& [n, c] : coeffs_) {
        auto it = other.coeffs_.find(n);
        if (it != other.coeffs_.end()) s += std::conj(c) * it->second;
    }
    return s;
}

double FockVector::max_abs_diff(const FockVector& other) const {
    double d = 0.0;
    for (const auto& [n, c] : coeffs_) d = std::max(d, std::abs(c - other[n]));
    for (const auto& [n, c] : other.coeffs_)
        if (!coeffs_.count(n)) d = std::max(d, std::abs(c));
    return d;
}

FockVector& FockVector::operator+=(const FockVector& other) {
    for (const auto& [n, c] : other.coeffs_) coeffs_[n] += c;
    return *this;
}

FockVector& FockVector::operator*=(cplx s) {
    for (auto& [n, c] : coeffs_) c *= s;
    return *this;
}

// -------------------------------------------------------------- FockOperator

FockOperator FockOperator::identity() { return scalar(1.0); }

FockOperator FockOperator::scalar(cplx value) { return shift(0, Symbol(value)); }

FockOperator FockOperator::annihilation() { return shift(-1, sqrt(Symbol::number(0))); }

FockOperator FockOperator::creation() { return shift(1, sqrt(Symbol::number(1))); }

FockOperator FockOperator::number() { return diagonal(Symbol::number(0)); }

FockOperator FockOperator::diagonal(const Symbol& f) { return shift(0, f); }

FockOperator FockOperator::shift(int degree, const Symbol& coeff) {
    FockOperator op;
    op.add_term(degree, coeff);
    return op;
}

void FockOperator::add_term(int degree, const Symbol& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
        terms_.emplace(degree, coeff);
        return;
    }
    Symbol sum = it->second + coeff;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

std::vector<ShiftTerm> FockOperator::term_list() const {
    std::vector<ShiftTerm> out;
    out.reserve(terms_.size());
    for (const auto& [d, c] : terms_) out.push_back({d, c});
    return out;
}

bool FockOperator::is_diagonal() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::optional<FockVector> FockOperator::column(long n) const {
    FockVector out;
    for (const auto& [d, c] : terms_) {
        const long target = n + d;
        // evaluate before the vacuum cut so singular inner factors still show up
        auto value = c.eval(n);
        if (!value) return std::nullopt;
        if (target < 0) continue;
        if (*value != cplx{}) out.add(target, *value);
    }
    return out;
}

bool FockOperator::is_singular_at(long n) const { return !column(n).has_value(); }

FockVector FockOperator::apply(const FockVector& v) const {
    FockVector out;
    std::set<long> bad;
    for (const auto& [n, amp] : v.coeffs()) {
        auto col = column(n);
        if (!col) {
            bad.insert(n);
            continue;
        }
        out += amp * *col;
    }
    if (!bad.empty()) throw DomainError(SlotStates{{0, bad}});
    return out;
}

cplx FockOperator::matrix_element(long m, long n) const {
    auto col = column(n);
    if (!col) throw DomainError(SlotStates{{0, {n}}});
    return (*col)[m];
}

std::set<long> FockOperator::singular_support(long n_max) const {
    std::set<long> out;
    for (long n = 0; n <= n_max; ++n)
        if (is_singular_at(n)) out.insert(n);
    return out;
}

FockOperator FockOperator::adjoint() const {
    // (d, c)^dagger = (-d, n -> conj(c(n - d)))
    FockOperator out;
    for (const auto& [d, c] : terms_) out.add_term(-d, c.shifted(-d).conj());
    return out;
}

FockOperator& FockOperator::operator+=(const FockOperator& other) {
    for (const auto& [d, c] : other.terms_) add_term(d, c);
    return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& other) {
    for (const auto& [d, c] : other.terms_) add_term(d, -c);
    return *this;
}

FockOperator operator-(const FockOperator& a) {
    FockOperator out;
    for (const auto& [d, c] : a.terms_) out.add_term(d, -c);
    return out;
}

FockOperator operator*(cplx s, const FockOperator& a) {
    FockOperator out;
    if (s == cplx{}) return out;
    for (const auto& [d, c] : a.terms_) out.add_term(d, Symbol(s) * c);
    return out;
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    // (d2, c2) o (d1, c1) = (d1 + d2, n -> c2(n + d1) c1(n))
    FockOperator out;
    for (const auto& [d1, c1] : b.terms_)
        for (const auto& [d2, c2] : a.terms_) out.add_term(d1 + d2, Symbol::composed(c2, d1, c1));
    return out;
}

FockOperator compose(const FockOperator& a, const FockOperator& b) { return a * b; }

FockOperator adjoint(const FockOperator& op) { return op.adjoint(); }

namespace {

const Symbol& diagonal_symbol(const FockOperator& op, const char* what) {
    static const Symbol zero;
    if (!op.is_diagonal())
        throw AlgebraError(std::string(what) + " is only defined for functions of N (shift degree 0)");
    return op.is_zero() ? zero : op.terms().begin()->second;
}

}  // namespace

FockOperator inverse(const FockOperator& op, double sigma) {
    const Symbol& f = diagonal_symbol(op, "inverse");
    return FockOperator::diagonal(divide(Symbol(1.0), f, sigma));
}

FockOperator sqrt(const FockOperator& op, double sigma) {
    const Symbol& f = diagonal_symbol(op, "sqrt");
    return FockOperator::diagonal(sqrt(f, sigma));
}

FockOperator pow(const FockOperator& op, double exponent, double sigma) {
    const Symbol& f = diagonal_symbol(op, "pow");
    return FockOperator::diagonal(pow(f, exponent, sigma));
}

FockOperator power(const FockOperator& op, int exponent) {
    if (exponent < 0) throw AlgebraError("power: negative exponent, use inverse()");
    FockOperator out = FockOperator::identity();
    for (int k = 0; k < exponent; ++k) out = out * op;
    return out;
}

EqualityReport op_equal(const FockOperator& a, const FockOperator& b, long n_max, double tol) {
    EqualityReport rep;
    rep.tolerance = tol;
    for (long n = 0; n <= n_max; ++n) {
        auto ca = a.column(n);
        auto cb = b.column(n);
        if (!ca || !cb) {
            rep.excluded.insert(n);
            continue;
        }
        FockVector diff = *ca + (-1.0) * *cb;
        for (const auto& [m, v] : diff.coeffs()) {
            if (m > n_max) continue;
            const double dev = std::abs(v);
            if (dev > rep.max_deviation) {
                rep.max_deviation = dev;
                rep.arg_m = m;
                rep.arg_n = n;
            }
            if (dev > tol && rep.first_m < 0) {
                rep.first_m = m;
                rep.first_n = n;
                rep.first_deviation = dev;
            }
        }
    }
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

}  // namespace fockbundle
