#include "etaprove/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace etaprove {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_.get_num() = num;
    value_.get_den() = den;
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto parse_int = [&](std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        std::string digits(s.substr(s[0] == '+' ? 1 : 0));
        return Integer(digits, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Integer Rational::floor() const
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::abs() const
{
    Rational r;
    mpq_abs(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer " + z.get_str() + " does not fit in 64 bits");
    return z.get_si();
}

std::int64_t Rational::to_int64() const
{
    if (!is_integer())
        throw std::domain_error("rational " + str() + " is not an integer");
    return etaprove::to_int64(value_.get_num());
}

std::string Rational::str() const
{
    return value_.get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b)
{
    if (a.is_integer() && b.is_integer() && is_integer()) {
        mpz_addmul(value_.get_num_mpz_t(), a.value_.get_num_mpz_t(), b.value_.get_num_mpz_t());
        return;
    }
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), t.get_mpq_t());
}

Rational Rational::operator-() const
{
    Rational r;
    mpq_neg(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

}  // namespace etaprove
