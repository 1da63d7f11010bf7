#pragma once

#include "etaprove/eta_product.hpp"
#include "etaprove/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace etaprove {

/// Infinity, or a reduced fraction b/c with c >= 1 (0 is 0/1).
class Cusp {
public:
    static Cusp infinity() { return Cusp(); }

    /// Reduces b/c; c must be nonzero (a negative c flips both signs).
    Cusp(std::int64_t b, std::int64_t c);

    bool is_infinity() const { return infinite_; }
    std::int64_t numerator() const { return b_; }
    std::int64_t denominator() const { return c_; }

    /// "oo", "0", "1/2".
    std::string str() const;

    /// Accepts "oo", "infinity", "b/c" or an integer.
    static Cusp parse(const std::string& text);

    friend bool operator==(const Cusp&, const Cusp&) = default;
    friend auto operator<=>(const Cusp&, const Cusp&) = default;

private:
    Cusp() = default;

    bool infinite_ = true;
    std::int64_t b_ = 1;
    std::int64_t c_ = 0;
};

/// One inequivalent representative per cusp class of Gamma0(N): for each
/// divisor d of N (ascending), numerators x coprime to d, one per class mod
/// gcd(d, N/d), each the smallest such x >= 0. The class of infinity appears
/// as 1/N.
std::vector<Cusp> cusp_set(std::int64_t level);

/// True when s is Gamma0(N)-equivalent to infinity (N divides its denominator).
bool is_infinity_class(const Cusp& s, std::int64_t level);

/// cusp_set(N) without the class of infinity.
std::vector<Cusp> finite_cusps(std::int64_t level);

/// N / gcd(N, c^2); 1 at infinity.
std::int64_t fan_width(const Cusp& s, std::int64_t level);

/// Invariant order sum_j gcd(t_j, c)^2 r_j / (24 t_j); sum t_j r_j / 24 at infinity.
Rational cusp_ord(const EtaProduct& ep, const Cusp& s);

/// fan_width(s, N) * cusp_ord(ep, s).
Rational cusp_ORD(const EtaProduct& ep, std::int64_t level, const Cusp& s);

struct CuspOrder {
    Cusp cusp;
    Rational ord;

    friend bool operator==(const CuspOrder&, const CuspOrder&) = default;
};

using OrdVector = std::vector<CuspOrder>;

OrdVector cusp_ORDS(const EtaProduct& ep, std::span<const Cusp> cusps, std::int64_t level);

/// Sum of cusp_ORD over the full cusp_set(N).
Rational total_ORD(const EtaProduct& ep, std::int64_t level);

/// "[[0,1],[1/2,-5]]".
std::string format_ords(const OrdVector& v);

}  // namespace etaprove
