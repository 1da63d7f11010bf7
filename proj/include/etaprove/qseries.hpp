#pragma once

#include "etaprove/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace etaprove {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The series has no nonzero term below its truncation order.
struct ZeroLeadingTerm : SeriesError {
    using SeriesError::SeriesError;
};

/// An integer-exponent operation met a term q^e with e not an integer.
struct FractionalExponent : SeriesError {
    using SeriesError::SeriesError;
};

/// An exponent or truncation order off the (1/24)Z lattice.
struct LatticeError : SeriesError {
    using SeriesError::SeriesError;
};

/// Number of lattice steps per unit exponent. Every exponent e satisfies 24e in Z.
inline constexpr std::int64_t kLattice = 24;

struct LeadingTerm {
    Rational exponent;
    Rational coeff;
};

/// Truncated q-series  sum c_e q^e + O(q^trunc)  with e in (1/24)Z.
///
/// Exponents are held as lattice indices (e = index/24). Terms are sorted by
/// exponent, carry nonzero coefficients, and all lie strictly below trunc.
class QSeries {
public:
    struct Term {
        std::int64_t index;  ///< exponent times 24
        Rational coeff;

        Rational exponent() const { return Rational(index) / kLattice; }
    };

    /// O(q^trunc).
    static QSeries zero(const Rational& trunc);
    static QSeries constant(const Rational& c, const Rational& trunc);
    static QSeries monomial(const Rational& c, const Rational& exponent, const Rational& trunc);

    /// Builds from (exponent, coefficient) pairs in any order; like exponents are
    /// merged, zeros and terms at or past trunc dropped. Throws LatticeError.
    static QSeries from_terms(std::span<const std::pair<Rational, Rational>> terms,
                              const Rational& trunc);

    /// Integer-exponent series from a coefficient list: coeffs[k] is the
    /// coefficient of q^(start + k).
    static QSeries from_coefficients(std::span<const Rational> coeffs, std::int64_t start,
                                     const Rational& trunc);

    /// Lattice-level constructor: terms need not be sorted or merged.
    static QSeries from_lattice(std::vector<Term> terms, std::int64_t trunc_index);

    std::span<const Term> terms() const { return terms_; }
    std::int64_t trunc_index() const { return trunc_; }
    Rational trunc() const { return Rational(trunc_) / kLattice; }

    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of q^e (zero if absent); throws SeriesError if e >= trunc.
    Rational coeff(const Rational& exponent) const;

    std::optional<LeadingTerm> leading_term() const;

    /// Lattice index of the leading term, or trunc when the series is zero.
    std::int64_t valuation_index() const;

    bool has_integer_exponents() const;

    /// Same terms with trunc lowered to min(trunc, t).
    QSeries truncated(const Rational& t) const;
    QSeries truncated_index(std::int64_t t) const;

    /// Multiply by q^e.
    QSeries shifted(const Rational& e) const;
    QSeries scaled(const Rational& c) const;

    /// f(q) -> f(q^m), m >= 1.
    QSeries dilated(std::int64_t m) const;

    /// "1 + q + q^3 + O(q^10)".
    std::string str() const;

    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    std::vector<Term> terms_;
    std::int64_t trunc_ = 0;
};

bool operator==(const QSeries::Term& a, const QSeries::Term& b);

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_neg(const QSeries& a);

/// Cauchy product; trunc = min(a.trunc + v(b), b.trunc + v(a)) where v is the
/// valuation (the trunc itself for a zero series).
QSeries series_mul(const QSeries& a, const QSeries& b);

/// 1/a with trunc min(depth, a.trunc - 2 ord(a)). Throws ZeroLeadingTerm.
QSeries series_invert(const QSeries& a, const Rational& depth);

/// a/b by the recurrence over the (typically sparse) terms of b; trunc
/// min(a.trunc - ord(b), b.trunc + v(a) - 2 ord(b)). Throws ZeroLeadingTerm.
QSeries series_div(const QSeries& a, const QSeries& b);

/// a^n by binary exponentiation; negative n inverts first.
QSeries series_pow(const QSeries& a, std::int64_t n);

/// prod_{n>=1} (1 - q^(t n)) + O(q^depth), via the pentagonal-number series.
QSeries euler_product(std::int64_t t, const Rational& depth);

/// eta(t tau) = q^(t/24) prod_{n>=1} (1 - q^(t n)) + O(q^depth).
QSeries eta_series(std::int64_t t, const Rational& depth);

/// sum_{pn+j < trunc} a(pn+j) q^n, trunc ceil((a.trunc - j)/p).
/// Throws FractionalExponent; throws std::invalid_argument on p < 1 or j outside [0,p).
QSeries sift(const QSeries& a, std::int64_t p, std::int64_t j);

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);

/// Smallest lattice index i with i/24 >= e.
std::int64_t lattice_ceil(const Rational& e);

}  // namespace etaprove
