#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>

namespace fockbundle {

using cplx = std::complex<double>;

/// Magnitude below which a divisor counts as zero.
inline constexpr double kDefaultSigma = 1e-12;

/// Singularity tolerance used for detuning-dependent symbols: 1e-12 * (1 + |theta|).
double sigma_for(double theta);

/// A scalar function of the number operator N, stored as an immutable expression
/// tree and evaluated pointwise at basis indices n >= 0.
///
/// Evaluation returns std::nullopt at singular points: a divisor with magnitude
/// below its sigma, the square root of a real value below -sigma, a non-integer
/// power of a negative real, or a photon count N+k that drops below zero.
/// Values within sigma of zero are snapped to zero under a square root, so
/// R(0) +/- theta collapses to an exact zero instead of leaking float noise
/// through the root.
class Symbol {
  public:
    struct Node;

    Symbol();  // identically zero
    Symbol(double value);  // NOLINT(google-explicit-constructor)
    Symbol(cplx value);    // NOLINT(google-explicit-constructor)

    static Symbol constant(cplx value);
    /// n + offset, evaluated for any n.
    static Symbol number(int offset = 0);
    /// n + offset as a photon count: singular when n + offset < 0.
    static Symbol count(int offset = 0);

    std::optional<cplx> eval(long n) const;

    /// s(n + d); zero (not singular) when n + d < 0, the state does not exist.
    Symbol shifted(int d) const;
    /// (outer ∘ inner)(n) for a shift term: zero when n + d < 0, otherwise
    /// outer(n + d) * inner(n).
    static Symbol composed(const Symbol& outer, int d, const Symbol& inner);

    Symbol conj() const;

    /// Structural zero: a constant 0. Does not detect expressions that merely
    /// evaluate to zero.
    bool is_zero() const;
    bool is_constant() const;

    std::string to_string() const;

    friend Symbol operator+(const Symbol& a, const Symbol& b);
    friend Symbol operator-(const Symbol& a, const Symbol& b);
    friend Symbol operator*(const Symbol& a, const Symbol& b);
    friend Symbol operator/(const Symbol& a, const Symbol& b);
    friend Symbol operator-(const Symbol& a);

    friend Symbol divide(const Symbol& num, const Symbol& den, double sigma);
    friend Symbol sqrt(const Symbol& x, double sigma);
    friend Symbol pow(const Symbol& x, double exponent, double sigma);
    friend Symbol sin(const Symbol& x);
    friend Symbol cos(const Symbol& x);
    friend Symbol sinc(const Symbol& x);

  private:
    explicit Symbol(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

Symbol divide(const Symbol& num, const Symbol& den, double sigma = kDefaultSigma);
Symbol sqrt(const Symbol& x, double sigma = kDefaultSigma);
Symbol pow(const Symbol& x, double exponent, double sigma = kDefaultSigma);
Symbol sin(const Symbol& x);
Symbol cos(const Symbol& x);
/// sin(x)/x, with the removable singularity at 0 filled by a Taylor series.
Symbol sinc(const Symbol& x);

/// Scalar sinc used by the symbol tree: 7-term Taylor series for |x| < 1e-2.
cplx sinc_value(cplx x);

}  // namespace fockbundle
