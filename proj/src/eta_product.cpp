#include "etaprove/eta_product.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace etaprove {

EtaProduct::EtaProduct(std::vector<EtaFactor> factors)
{
    std::map<std::int64_t, std::int64_t, std::greater<>> merged;
    for (const auto& f : factors) {
        if (f.t < 1)
            throw std::invalid_argument("eta multiplier must be positive, got " +
                                        std::to_string(f.t));
        merged[f.t] += f.r;
    }
    for (const auto& [t, r] : merged)
        if (r != 0)
            factors_.push_back({t, r});
}

EtaProduct EtaProduct::from_list(std::span<const std::int64_t> flat)
{
    if (flat.size() % 2 != 0)
        throw std::invalid_argument("eta-product list must have even length");
    std::vector<EtaFactor> f;
    for (std::size_t i = 0; i < flat.size(); i += 2)
        f.push_back({flat[i], flat[i + 1]});
    return EtaProduct(std::move(f));
}

std::vector<std::int64_t> EtaProduct::to_list() const
{
    std::vector<std::int64_t> out;
    for (const auto& f : factors_) {
        out.push_back(f.t);
        out.push_back(f.r);
    }
    return out;
}

std::int64_t EtaProduct::exponent_of(std::int64_t t) const
{
    for (const auto& f : factors_)
        if (f.t == t)
            return f.r;
    return 0;
}

std::int64_t EtaProduct::exponent_sum() const
{
    std::int64_t s = 0;
    for (const auto& f : factors_)
        s += f.r;
    return s;
}

Rational EtaProduct::order_at_infinity() const
{
    std::int64_t s = 0;
    for (const auto& f : factors_)
        s += f.t * f.r;
    return Rational(s) / kLattice;
}

EtaProduct EtaProduct::inverse() const
{
    return pow(-1);
}

EtaProduct EtaProduct::pow(std::int64_t n) const
{
    std::vector<EtaFactor> f(factors_.begin(), factors_.end());
    for (auto& x : f)
        x.r *= n;
    return EtaProduct(std::move(f));
}

EtaProduct EtaProduct::dilated(std::int64_t m) const
{
    if (m < 1)
        throw std::invalid_argument("dilation factor must be positive");
    std::vector<EtaFactor> f(factors_.begin(), factors_.end());
    for (auto& x : f)
        x.t *= m;
    return EtaProduct(std::move(f));
}

EtaProduct operator*(const EtaProduct& a, const EtaProduct& b)
{
    std::vector<EtaFactor> f(a.factors_.begin(), a.factors_.end());
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return EtaProduct(std::move(f));
}

EtaProduct operator/(const EtaProduct& a, const EtaProduct& b)
{
    return a * b.inverse();
}

std::string EtaProduct::str() const
{
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& f : factors_) {
        if (!first)
            os << ",";
        os << f.t << "," << f.r;
        first = false;
    }
    os << "]";
    return os.str();
}

std::string EtaProduct::expr_str() const
{
    auto part = [](std::int64_t t, std::int64_t r) {
        std::string s = "eta(" + std::to_string(t) + ")";
        if (r != 1)
            s += "^" + std::to_string(r);
        return s;
    };
    std::string num, den;
    int nden = 0;
    for (const auto& f : factors_) {
        if (f.r > 0) {
            num += (num.empty() ? "" : "*") + part(f.t, f.r);
        } else {
            den += (den.empty() ? "" : "*") + part(f.t, -f.r);
            ++nden;
        }
    }
    if (num.empty())
        num = "1";
    if (den.empty())
        return num;
    return num + "/" + (nden > 1 ? "(" + den + ")" : den);
}

EtaCombo::EtaCombo(Rational constant, std::vector<EtaTerm> terms) : constant_(std::move(constant))
{
    for (auto& t : terms) {
        if (t.product.empty()) {
            constant_ += t.coeff;
            continue;
        }
        auto it = std::find_if(terms_.begin(), terms_.end(),
                               [&](const EtaTerm& x) { return x.product == t.product; });
        if (it != terms_.end())
            it->coeff += t.coeff;
        else
            terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const EtaTerm& t) { return t.coeff.is_zero(); });
}

std::vector<EtaTerm> EtaCombo::as_terms() const
{
    std::vector<EtaTerm> out;
    if (!constant_.is_zero())
        out.push_back({constant_, EtaProduct()});
    out.insert(out.end(), terms_.begin(), terms_.end());
    return out;
}

std::string EtaCombo::str() const
{
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& body) {
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                mag = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            mag = c.abs();
        }
        first = false;
        if (body.empty()) {
            os << mag;
            return;
        }
        if (mag != Rational(1))
            os << mag << "*";
        os << body;
    };
    if (!constant_.is_zero())
        emit(constant_, "");
    for (const auto& t : terms_)
        emit(t.coeff, t.product.str());
    if (first)
        os << "0";
    return os.str();
}

QSeries expand_no_prefactor(const EtaProduct& ep, const Rational& depth)
{
    QSeries acc = QSeries::constant(Rational(1), depth);
    for (const auto& f : ep.factors()) {
        QSeries e = euler_product(f.t, depth);
        for (std::int64_t k = 0; k < (f.r > 0 ? f.r : -f.r); ++k)
            acc = f.r > 0 ? series_mul(acc, e) : series_div(acc, e);
    }
    return acc;
}

QSeries expand(const EtaProduct& ep, const Rational& depth)
{
    Rational offset = ep.order_at_infinity();
    return expand_no_prefactor(ep, depth - offset).shifted(offset);
}

EtaProduct eta_factorize(const QSeries& f, const Rational& depth)
{
    QSeries g = f.truncated(depth);
    auto lead = g.leading_term();
    if (!lead)
        throw NotAnEtaProduct("series is zero up to O(q^" + g.trunc().str() + ")");
    if (lead->coeff != Rational(1))
        throw NotAnEtaProduct("leading coefficient is " + lead->coeff.str() + ", not 1");
    QSeries h = g.shifted(-lead->exponent);
    if (!h.has_integer_exponents())
        throw NotAnEtaProduct("exponents are not congruent modulo 1");

    const Rational trusted = h.trunc() / 2;
    std::vector<EtaFactor> factors;
    while (true) {
        auto terms = h.terms();
        auto it = std::find_if(terms.begin(), terms.end(),
                               [](const QSeries::Term& t) { return t.index != 0; });
        if (it == terms.end())
            break;
        Rational n = it->exponent();
        if (n.sign() < 0)
            throw NotAnEtaProduct("term below the leading term after division");
        if (n > trusted)
            throw NotAnEtaProduct("residual term at q^" + n.str() +
                                  " lies beyond the trusted depth " + trusted.str());
        if (!it->coeff.is_integer())
            throw NotAnEtaProduct("non-integral coefficient " + it->coeff.str() + " at q^" +
                                  n.str());
        if (!it->coeff.num().fits_slong_p())
            throw NotAnEtaProduct("coefficient " + it->coeff.str() + " at q^" + n.str() +
                                  " is too large for an exponent");
        std::int64_t t = n.to_int64();
        std::int64_t r = -it->coeff.to_int64();
        factors.push_back({t, r});
        // The residual keeps its own truncation order; divide out eta(t tau)^r
        // without the prefactor.
        h = series_mul(h, series_pow(euler_product(t, h.trunc()), -r));
    }
    EtaProduct ep(std::move(factors));
    if (ep.order_at_infinity() != lead->exponent)
        throw NotAnEtaProduct("leading exponent " + lead->exponent.str() +
                              " does not match sum t*r/24 = " + ep.order_at_infinity().str() +
                              " of the recovered product " + ep.str());
    return ep;
}

QSeries combo_expand(const EtaCombo& c, const Rational& depth)
{
    QSeries acc = QSeries::constant(c.constant(), depth);
    for (const auto& t : c.terms())
        acc = series_add(acc, expand(t.product, depth).scaled(t.coeff));
    return acc;
}

}  // namespace etaprove
