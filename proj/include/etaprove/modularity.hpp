#pragma once

#include "etaprove/eta_product.hpp"
#include "etaprove/rational.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace etaprove {

/// Newman's criterion for an eta-product to be a modular function on Gamma0(N),
/// with every condition evaluated:
///   (1) sum r = 0
///   (2) sum t r = 0 mod 24
///   (3) prod t^|r| is a square
///   (4) r != 0 and t | N for each factor
///   (5) sum (N/t) r = 0 mod 24
struct ModularityVerdict {
    std::array<bool, 5> conditions{};

    bool invariant() const;
    bool holds(int condition) const { return conditions.at(condition - 1); }

    /// "Condition (3) does not hold" lines, then the overall verdict.
    std::string report() const;
};

ModularityVerdict gamma_check(const EtaProduct& ep, std::int64_t level);

/// Weight and quadratic character of an eta-quotient that is a form on
/// Gamma0(N) with character chi(d) = (disc/d).
struct FormVerdict {
    std::int64_t level = 1;
    Rational weight;
    /// (-1)^k prod t^|r|, the character argument before square reduction.
    Integer cleared;
    /// Squarefree kernel of `cleared`, sign kept.
    Integer kernel;
    /// Discriminant of the square class: kernel, or 4*kernel when kernel != 1 mod 4.
    Integer character_disc;
    bool half_integral_weight = false;
};

struct NotAForm {
    std::vector<std::string> reasons;
};

std::variant<FormVerdict, NotAForm> form_check(const EtaProduct& ep, std::int64_t level);

struct UndefinedSymbol : std::domain_error {
    using std::domain_error::domain_error;
};

/// Kronecker symbol (a/n). Throws UndefinedSymbol for (0/0).
int kronecker(std::int64_t a, std::int64_t n);

}  // namespace etaprove
