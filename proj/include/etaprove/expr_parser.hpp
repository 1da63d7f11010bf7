#pragma once

#include "etaprove/eta_product.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace etaprove {

/// Syntax error at a 1-based line and column.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int column);
    int line;
    int column;
};

/// A well-formed expression that is not a combination of eta-products
/// (e.g. division by a sum).
struct LoweringError : std::runtime_error {
    LoweringError(const std::string& msg, int line, int column);
    int line;
    int column;
};

/// Expression tree over eta(K), [t1,r1,...], integer literals, names,
/// + - * / ^ and parentheses.
struct EtaExpr {
    enum class Kind { Number, Eta, List, Name, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind = Kind::Number;
    Integer number;                 ///< Number
    std::int64_t multiplier = 0;    ///< Eta
    std::vector<std::int64_t> list; ///< List
    std::string name;               ///< Name
    std::int64_t exponent = 0;      ///< Pow
    std::vector<std::shared_ptr<const EtaExpr>> kids;

    int line = 1;
    int column = 1;
    std::size_t begin = 0;  ///< source offsets of the subexpression
    std::size_t end = 0;
};

using Bindings = std::map<std::string, std::vector<EtaTerm>, std::less<>>;

/// Parses one expression (no bindings, no '=').
std::shared_ptr<const EtaExpr> parse_expr(std::string_view text);

/// Lowers an expression to a list of terms, merged in first-appearance order.
std::vector<EtaTerm> lower(const EtaExpr& e, std::string_view source, const Bindings& env = {});

/// parse_expr + lower.
std::vector<EtaTerm> parse_terms(std::string_view text);

/// Contents of an identity file:
///   # comment
///   let NAME = expr;
///   lhs [= rhs]          (linear identity lhs - rhs = 0)
///   U(p) lhs = rhs       (lhs a single eta-product)
struct IdentityFile {
    enum class Kind { Linear, Up };

    Kind kind = Kind::Linear;
    /// Linear: lhs - rhs, source order.
    std::vector<EtaTerm> terms;
    /// Up: U_p(source) = rhs.
    std::int64_t prime = 0;
    EtaProduct source;
    EtaCombo rhs;
};

IdentityFile parse_identity_file(std::string_view text);

/// A linear identity, lowered and normalized.
EtaCombo parse_identity(std::string_view text);

}  // namespace etaprove
