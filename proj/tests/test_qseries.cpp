#include "etaprove/qseries.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace etaprove;
using testsupport::R;

namespace {

QSeries poly(std::vector<std::int64_t> cs, std::int64_t start, std::int64_t trunc)
{
    std::vector<Rational> rs(cs.begin(), cs.end());
    return QSeries::from_coefficients(rs, start, trunc);
}

QSeries random_series(std::mt19937_64& rng, std::int64_t start, std::int64_t trunc)
{
    std::uniform_int_distribution<int> c(-9, 9), d(1, 4);
    std::vector<std::pair<Rational, Rational>> ts;
    for (std::int64_t i = start * 24; i < trunc * 24; i += 3)
        if (rng() % 4 == 0)
            ts.push_back({R(i, 24), R(c(rng), d(rng))});
    return QSeries::from_terms(ts, trunc);
}

// Direct product prod_{n>=1} (1 - q^(t n)) by repeated multiplication.
QSeries brute_euler(std::int64_t t, std::int64_t depth)
{
    QSeries acc = QSeries::constant(1, depth);
    for (std::int64_t n = 1; t * n < depth; ++n) {
        std::vector<std::pair<Rational, Rational>> f{{R(0), R(1)}, {R(t * n), R(-1)}};
        acc = series_mul(acc, QSeries::from_terms(f, depth));
    }
    return acc;
}

}  // namespace

TEST_CASE("addition merges like terms and keeps the smaller truncation")
{
    auto a = poly({1, 1}, 0, 10);
    auto b = poly({-1, -1, 1}, 0, 7);
    auto s = a + b;
    CHECK(s == QSeries::monomial(1, 2, 7));
    CHECK(s.trunc() == 7);
    CHECK(a + QSeries::zero(10) == a);

    std::vector<std::pair<Rational, Rational>> x{{R(1, 8), R(1)}, {R(9, 8), R(1)}};
    std::vector<std::pair<Rational, Rational>> y{{R(1, 8), R(1)}};
    std::vector<std::pair<Rational, Rational>> want{{R(1, 8), R(2)}, {R(9, 8), R(1)}};
    CHECK(QSeries::from_terms(x, 5) + QSeries::from_terms(y, 5) == QSeries::from_terms(want, 5));
}

TEST_CASE("multiplication, inversion and powers")
{
    auto geo = poly(std::vector<std::int64_t>(20, 1), 0, 20);
    CHECK(poly({1, -1}, 0, 20) * geo == QSeries::constant(1, 20));
    auto m = QSeries::monomial(1, R(1, 24), 5);
    CHECK((m * m).leading_term()->exponent == R(1, 12));

    auto inv = series_invert(poly({1, -1}, 0, 30), 15);
    CHECK(inv == geo.truncated(15));
    auto mi = series_invert(QSeries::monomial(1, R(1, 24), 10), 5);
    CHECK(mi.leading_term()->exponent == R(-1, 24));
    CHECK(mi.terms().size() == 1);
    CHECK_THROWS_AS(series_invert(QSeries::zero(10), 5), ZeroLeadingTerm);

    auto e = eta_series(1, 40);
    CHECK(series_pow(e, 0) == QSeries::constant(1, e.trunc() - R(1, 24)));
    CHECK(series_pow(e, 1) == e);
    CHECK(series_mul(series_pow(e, -1), e) == QSeries::constant(1, series_mul(series_pow(e, -1), e).trunc()));
    CHECK(series_pow(e, 3) == e * e * e);
}

TEST_CASE("leading terms")
{
    std::vector<std::pair<Rational, Rational>> x{{R(1, 8), R(1)}, {R(9, 8), R(1)}};
    auto lt = QSeries::from_terms(x, 5).leading_term();
    REQUIRE(lt);
    CHECK(lt->exponent == R(1, 8));
    CHECK(lt->coeff == 1);
    CHECK_FALSE(QSeries::zero(201).leading_term());
    CHECK(QSeries::constant(5, 3).leading_term()->coeff == 5);
    CHECK(QSeries::constant(5, 3).leading_term()->exponent == 0);
}

TEST_CASE("euler product agrees with the direct product")
{
    for (std::int64_t t : {1, 2, 3, 5, 7})
        CHECK(euler_product(t, 120) == brute_euler(t, 120));
    auto e = eta_series(1, 13);
    CHECK(e.str() == "q^(1/24) - q^(25/24) - q^(49/24) + q^(121/24) + q^(169/24) - q^(289/24) + O(q^13)");
}

TEST_CASE("partition numbers from the reciprocal of the euler product")
{
    auto p = series_invert(euler_product(1, 101), 101);
    std::vector<std::int64_t> small{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (std::size_t n = 0; n < small.size(); ++n)
        CHECK(p.coeff(static_cast<std::int64_t>(n)) == small[n]);
    CHECK(p.coeff(100) == Rational(Integer("190569292")));
}

TEST_CASE("eta(5)^6/eta(1)^6")
{
    auto d = series_div(series_pow(eta_series(5, 10), 6), series_pow(eta_series(1, 10), 6));
    CHECK(d.coeff(1) == 1);
    CHECK(d.coeff(2) == 6);
    CHECK(d.coeff(3) == 27);
    CHECK(d.coeff(4) == 98);
}

TEST_CASE("sift")
{
    auto s = sift(poly({1, 1, 1, 1, 1}, 0, 5), 2, 0);
    CHECK(s == poly({1, 1, 1}, 0, 3));
    auto odd = sift(poly({1, 2, 3, 4, 5}, 0, 5), 2, 1);
    CHECK(odd == poly({2, 4}, 0, 2));
    std::vector<std::pair<Rational, Rational>> x{{R(1, 8), R(1)}};
    CHECK_THROWS_AS(sift(QSeries::from_terms(x, 4), 2, 0), FractionalExponent);
}

TEST_CASE("printing")
{
    CHECK(poly({1, 1, 0, 1, 0, 0, 1}, 0, 10).str() == "1 + q + q^3 + q^6 + O(q^10)");
    CHECK(poly({-2, 0, 3}, -1, 4).str() == "-2*q^(-1) + 3*q + O(q^4)");
    CHECK(QSeries::zero(7).str() == "O(q^7)");
}

TEST_CASE("ring axioms on random truncated series")
{
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 220; ++i) {
        auto a = random_series(rng, -1, 6);
        auto b = random_series(rng, 0, 7);
        auto c = random_series(rng, 0, 5);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QSeries::zero(a.trunc()));
        auto one = QSeries::constant(1, 20);
        CHECK(a * one == a);
        if (b.leading_term() && b.leading_term()->exponent == 0) {
            auto prod = b * series_invert(b, 5);
            CHECK(prod == QSeries::constant(1, prod.trunc()));
        }
    }
}
