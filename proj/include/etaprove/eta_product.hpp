#pragma once

#include "etaprove/qseries.hpp"
#include "etaprove/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace etaprove {

/// eta(t tau)^r.
struct EtaFactor {
    std::int64_t t;
    std::int64_t r;

    friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
    friend auto operator<=>(const EtaFactor&, const EtaFactor&) = default;
};

/// prod_j eta(t_j tau)^(r_j), canonical: distinct t, nonzero r, descending t.
class EtaProduct {
public:
    EtaProduct() = default;

    /// Merges repeated t by summing exponents and drops zero exponents.
    /// Throws std::invalid_argument if some t < 1.
    explicit EtaProduct(std::vector<EtaFactor> factors);

    /// From the flat list [t1, r1, t2, r2, ...].
    static EtaProduct from_list(std::span<const std::int64_t> flat);

    std::vector<std::int64_t> to_list() const;

    std::span<const EtaFactor> factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    /// Exponent of eta(t tau); 0 if absent.
    std::int64_t exponent_of(std::int64_t t) const;

    /// sum r_j (twice the weight).
    std::int64_t exponent_sum() const;

    /// sum t_j r_j / 24, the exponent of the leading q-power.
    Rational order_at_infinity() const;

    EtaProduct inverse() const;
    EtaProduct pow(std::int64_t n) const;

    /// t_j -> m t_j, i.e. f(tau) -> f(m tau).
    EtaProduct dilated(std::int64_t m) const;

    /// "[5,6,1,-6]".
    std::string str() const;

    /// "eta(5)^6/eta(1)^6"; "1" for the empty product.
    std::string expr_str() const;

    friend EtaProduct operator*(const EtaProduct& a, const EtaProduct& b);
    friend EtaProduct operator/(const EtaProduct& a, const EtaProduct& b);
    friend bool operator==(const EtaProduct&, const EtaProduct&) = default;
    friend auto operator<=>(const EtaProduct&, const EtaProduct&) = default;

private:
    std::vector<EtaFactor> factors_;
};

struct EtaTerm {
    Rational coeff;
    EtaProduct product;

    friend bool operator==(const EtaTerm&, const EtaTerm&) = default;
};

/// constant + sum_j coeff_j * product_j.
///
/// Terms keep first-appearance order; repeated products are merged, empty
/// products are folded into the constant and zero coefficients are dropped.
class EtaCombo {
public:
    EtaCombo() = default;
    explicit EtaCombo(Rational constant, std::vector<EtaTerm> terms = {});

    const Rational& constant() const { return constant_; }
    std::span<const EtaTerm> terms() const { return terms_; }

    /// The constant (if nonzero) followed by the terms, as one term list.
    std::vector<EtaTerm> as_terms() const;

    /// Grammar form, e.g. "1 + 9*[6,4,3,4,2,-4,1,-4] - [...]".
    std::string str() const;

    friend bool operator==(const EtaCombo&, const EtaCombo&) = default;

private:
    Rational constant_;
    std::vector<EtaTerm> terms_;
};

struct NotAnEtaProduct : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// q-expansion of ep to O(q^depth), including the prefactor q^(sum t r / 24).
QSeries expand(const EtaProduct& ep, const Rational& depth);

/// As expand, with each eta(t tau) contributing no q^(t/24).
QSeries expand_no_prefactor(const EtaProduct& ep, const Rational& depth);

/// Recognizes f as an eta-product to O(q^depth). Factors are only read below
/// half the available depth; a residual term beyond that raises NotAnEtaProduct.
EtaProduct eta_factorize(const QSeries& f, const Rational& depth);

QSeries combo_expand(const EtaCombo& c, const Rational& depth);

}  // namespace etaprove
