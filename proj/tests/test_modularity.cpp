#include "etaprove/modularity.hpp"
#include "support.hpp"

#include <gmp.h>

#include <doctest.h>

using namespace etaprove;
using testsupport::ep;
using testsupport::R;

TEST_CASE("Newman conditions")
{
    auto bad = gamma_check(ep({1, 2, 2, -1, 10, 1, 5, -2}), 10);
    CHECK_FALSE(bad.invariant());
    CHECK(bad.holds(1));
    CHECK(bad.holds(2));
    CHECK_FALSE(bad.holds(3));
    CHECK(bad.holds(4));
    CHECK_FALSE(bad.holds(5));
    CHECK(bad.report() ==
          "Condition (1) holds\nCondition (2) holds\nCondition (3) does not hold\n"
          "Condition (4) holds\nCondition (5) does not hold\nfunction is NOT invariant\n");

    CHECK(gamma_check(ep({1, 4, 2, -2, 10, 2, 5, -4}), 10).invariant());
    CHECK(gamma_check(EtaProduct(), 7).invariant());
    CHECK(gamma_check(ep({5, 6, 1, -6}), 5).invariant());
    CHECK_FALSE(gamma_check(ep({5, 6, 1, -6}), 3).holds(4));
}

TEST_CASE("forms with character")
{
    auto v = form_check(ep({1, 4, 2, 4, 4, -3, 10, 2, 20, -1}), 40);
    REQUIRE(std::holds_alternative<FormVerdict>(v));
    const auto& f = std::get<FormVerdict>(v);
    CHECK(f.weight == 3);
    CHECK(f.cleared == Integer("-2048000"));
    CHECK(f.kernel == -5);
    CHECK(f.character_disc == -20);

    auto delta = std::get<FormVerdict>(form_check(ep({1, 24}), 1));
    CHECK(delta.weight == 12);
    CHECK(delta.character_disc == 1);

    auto fn = std::get<FormVerdict>(form_check(ep({1, 4, 2, -2, 10, 2, 5, -4}), 10));
    CHECK(fn.weight == 0);
    CHECK(fn.character_disc == 1);

    CHECK(std::holds_alternative<NotAForm>(form_check(ep({1, 2, 2, -1, 10, 1, 5, -2}), 10)));
    CHECK(std::holds_alternative<NotAForm>(form_check(ep({1, -24}), 1)));
}

TEST_CASE("kronecker symbol agrees with GMP")
{
    for (std::int64_t a = -60; a <= 60; ++a)
        for (std::int64_t n = -60; n <= 60; ++n) {
            if (a == 0 && n == 0) {
                CHECK_THROWS_AS(kronecker(0, 0), UndefinedSymbol);
                continue;
            }
            mpz_class A(static_cast<long>(a)), N(static_cast<long>(n));
            CHECK(kronecker(a, n) == mpz_kronecker(A.get_mpz_t(), N.get_mpz_t()));
        }
}

TEST_CASE("kronecker symbol is multiplicative in the top argument")
{
    for (std::int64_t n = 1; n <= 80; ++n)
        for (std::int64_t a = -15; a <= 15; ++a)
            for (std::int64_t b = -15; b <= 15; ++b)
                CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
}
