#include "etaprove/cusps.hpp"

#include "etaprove/arith.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace etaprove {

Cusp::Cusp(std::int64_t b, std::int64_t c) : infinite_(false)
{
    if (c == 0)
        throw std::invalid_argument("cusp denominator must be nonzero");
    if (c < 0) {
        b = -b;
        c = -c;
    }
    std::int64_t g = std::gcd(b, c);
    b_ = b / g;
    c_ = c / g;
}

std::string Cusp::str() const
{
    if (infinite_)
        return "oo";
    if (c_ == 1)
        return std::to_string(b_);
    return std::to_string(b_) + "/" + std::to_string(c_);
}

Cusp Cusp::parse(const std::string& text)
{
    if (text == "oo" || text == "infinity" || text == "inf")
        return infinity();
    try {
        auto slash = text.find('/');
        std::size_t used = 0;
        if (slash == std::string::npos) {
            std::int64_t b = std::stoll(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return Cusp(b, 1);
        }
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        std::int64_t b = std::stoll(num, &used);
        if (used != num.size())
            throw std::invalid_argument(text);
        std::int64_t c = std::stoll(den, &used);
        if (used != den.size())
            throw std::invalid_argument(text);
        return Cusp(b, c);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad cusp '" + text + "'");
    }
}

std::vector<Cusp> cusp_set(std::int64_t level)
{
    if (level < 1)
        throw std::invalid_argument("level must be positive");
    std::vector<Cusp> out;
    for (std::int64_t d : divisors(level)) {
        const std::int64_t e = std::gcd(d, level / d);
        std::vector<bool> seen(static_cast<std::size_t>(e), false);
        for (std::int64_t x = 0; x < d; ++x) {
            if (std::gcd(x, d) != 1)
                continue;
            auto cls = static_cast<std::size_t>(x % e);
            if (seen[cls])
                continue;
            seen[cls] = true;
            out.emplace_back(x, d);
        }
    }
    return out;
}

bool is_infinity_class(const Cusp& s, std::int64_t level)
{
    return s.is_infinity() || s.denominator() % level == 0;
}

std::vector<Cusp> finite_cusps(std::int64_t level)
{
    std::vector<Cusp> out;
    for (const auto& s : cusp_set(level))
        if (!is_infinity_class(s, level))
            out.push_back(s);
    return out;
}

std::int64_t fan_width(const Cusp& s, std::int64_t level)
{
    if (level < 1)
        throw std::invalid_argument("level must be positive");
    if (s.is_infinity())
        return 1;
    std::int64_t c = s.denominator() % level;
    return level / std::gcd(level, c * c % level);
}

Rational cusp_ord(const EtaProduct& ep, const Cusp& s)
{
    if (s.is_infinity())
        return ep.order_at_infinity();
    Rational sum;
    for (const auto& f : ep.factors()) {
        std::int64_t g = std::gcd(f.t, s.denominator());
        sum += Rational(g * g * f.r) / Rational(24 * f.t);
    }
    return sum;
}

Rational cusp_ORD(const EtaProduct& ep, std::int64_t level, const Cusp& s)
{
    return Rational(fan_width(s, level)) * cusp_ord(ep, s);
}

OrdVector cusp_ORDS(const EtaProduct& ep, std::span<const Cusp> cusps, std::int64_t level)
{
    OrdVector out;
    out.reserve(cusps.size());
    for (const auto& s : cusps)
        out.push_back({s, cusp_ORD(ep, level, s)});
    return out;
}

Rational total_ORD(const EtaProduct& ep, std::int64_t level)
{
    Rational sum;
    for (const auto& s : cusp_set(level))
        sum += cusp_ORD(ep, level, s);
    return sum;
}

std::string format_ords(const OrdVector& v)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ",";
        os << "[" << v[i].cusp.str() << "," << v[i].ord << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace etaprove
