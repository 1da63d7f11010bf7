#include "etaprove/cusps.hpp"
#include "etaprove/up_operator.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace etaprove;
using testsupport::ep;
using testsupport::R;

namespace {

std::vector<Rational> values(const OrdVector& v)
{
    std::vector<Rational> out;
    for (const auto& co : v)
        out.push_back(co.ord);
    return out;
}

const EtaProduct kF = ep({2, 1, 25, 1, 1, -1, 50, -1});
const EtaProduct kG = ep({5, 4, 2, 2, 10, -2, 1, -4});

}  // namespace

TEST_CASE("U_p on series")
{
    CHECK(up_series(expand(kF, 500), 5) == expand(kG, 100));
    CHECK(up_series(QSeries::constant(7, 30), 3) == QSeries::constant(7, 10));
    CHECK_THROWS_AS(up_series(QSeries::constant(1, 30), 4), PrecondFailed);

    std::vector<std::pair<Rational, Rational>> sq;
    for (std::int64_t n = 0; n * n < 200; ++n)
        sq.push_back({R(n * n), R(1)});
    auto u = up_series(QSeries::from_terms(sq, 200), 2);
    for (std::int64_t n = 0; n < 100; ++n) {
        std::int64_t k = 0;
        while (k * k < 2 * n)
            ++k;
        CHECK(u.coeff(n) == (k * k == 2 * n ? 1 : 0));
    }
}

TEST_CASE("bound cases are exclusive")
{
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t n = p; n <= 200; n += p)
            for (auto d : divisors(n)) {
                int v = valuation(d, p), w = valuation(n, p);
                auto c = up_bound_case(d, n, p);
                if (2 * v >= w)
                    CHECK(c == UpBoundCase::Scaled);
                else if (v > 0)
                    CHECK(c == UpBoundCase::Direct);
                else
                    CHECK(c == UpBoundCase::MinOverShifts);
            }
}

TEST_CASE("lower bounds")
{
    std::vector<Cusp> c10{Cusp(0, 1), Cusp(1, 2), Cusp(1, 5), Cusp(1, 10)};
    std::vector<Rational> lb;
    for (const auto& s : c10)
        lb.push_back(up_lower_bound(kF, s, 10, 5));
    CHECK(lb == std::vector<Rational>{-1, 0, R(1, 5), R(-1, 5)});
    auto exact = values(cusp_ORDS(kG, c10, 10));
    CHECK(exact == std::vector<Rational>{-1, 0, 1, 0});
    for (std::size_t i = 0; i < lb.size(); ++i)
        CHECK(lb[i] <= exact[i]);

    auto g = ep({100, -3, 50, 5, 25, -2, 10, -8, 5, 4, 4, 3, 2, 3, 1, -2});
    CHECK(format_ords(up_lower_bounds(g, 20, 5)) ==
          "[[0,0],[1/2,-2],[1/4,-2],[1/5,-1/5],[1/10,3/5]]");

    CHECK_THROWS_AS(up_lower_bound(kF, Cusp(0, 1), 12, 5), PrecondFailed);
    CHECK_THROWS_AS(up_lower_bound(ep({2, 1, 1, -1}), Cusp(0, 1), 10, 5), PrecondFailed);
}

TEST_CASE("U_p of a dilated product undoes the dilation")
{
    std::mt19937_64 rng(9);
    int cases = 0;
    for (std::int64_t p : {2, 3, 5})
        while (cases < 70 * (p == 2 ? 1 : p == 3 ? 2 : 3)) {
            auto h = testsupport::random_quotient(rng, 6, 4);
            if (!h.order_at_infinity().is_integer())
                continue;
            Rational d = 12;
            CHECK(up_series(expand(h.dilated(p), d * p), p) == expand(h, d));
            ++cases;
        }
    CHECK(cases >= 200);
}

TEST_CASE("U_p is multiplicative against dilated factors")
{
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> a(40), b(8);
        for (auto& x : a)
            x = c(rng);
        for (auto& x : b)
            x = c(rng);
        auto A = QSeries::from_coefficients(a, 0, 40);
        auto B = QSeries::from_coefficients(b, 0, 8);
        CHECK(up_series(A * B.dilated(5), 5) == up_series(A, 5) * B);
    }
}

TEST_CASE("bounds are below the exact orders whenever U_p lands on an eta-product")
{
    // U_5(F * h(5 tau)) = G * h for h on Gamma0(10), so every such product has
    // an eta-product image with known exact orders.
    std::mt19937_64 rng(12);
    for (int i = 0; i < 30; ++i) {
        auto h = testsupport::random_modular(rng, 10, 6);
        auto f = kF * h.dilated(5);
        REQUIRE(gamma_check(f, 50).invariant());
        Rational d = 40;
        auto image = up_series(expand(f, d * 5), 5);
        auto u = eta_factorize(image, d);
        CHECK(u == kG * h);
        auto lb = up_lower_bounds(f, 10, 5);
        auto ex = cusp_ORDS(u, finite_cusps(10), 10);
        for (std::size_t k = 0; k < lb.size(); ++k)
            CHECK(lb[k].ord <= ex[k].ord);
    }
}

TEST_CASE("the U_5 identity on Gamma0(20)")
{
    auto g = ep({100, -3, 50, 5, 25, -2, 10, -8, 5, 4, 4, 3, 2, 3, 1, -2});
    auto f1 = ep({10, 8, 5, -4, 2, -8, 1, 4});
    auto f2 = ep({20, -3, 10, 5, 5, -2, 4, -1, 2, -1, 1, 2});
    EtaCombo rhs(0, {{R(5), f1}, {R(2), f2}});
    auto r = prove_up_identity(g, 5, rhs, 20);
    CHECK(r.verdict == Verdict::Proved);
    CHECK(r.bound == R(-18, 5));
    CHECK(r.required_depth == 3);
    REQUIRE(r.rows.size() == 3);
    CHECK(format_ords(r.rows[0].ords) == "[[0,0],[1/2,-2],[1/4,-2],[1/5,0],[1/10,2]]");
    CHECK(format_ords(r.rows[1].ords) == "[[0,1],[1/2,0],[1/4,-1],[1/5,0],[1/10,1]]");
    CHECK(format_ords(r.rows[2].ords) == "[[0,0],[1/2,-2],[1/4,-2],[1/5,-1/5],[1/10,3/5]]");

    EtaCombo wrong(0, {{R(4), f1}, {R(2), f2}});
    auto bad = prove_up_identity(g, 5, wrong, 20);
    CHECK(bad.verdict == Verdict::Refuted);
    REQUIRE(bad.first_nonzero);
    CHECK(bad.first_nonzero->exponent == 2);
    CHECK(bad.first_nonzero->value == 1);

    CHECK(prove_up_identity(g, 3, rhs, 20).verdict == Verdict::NotApplicable);
    CHECK(prove_up_identity(EtaProduct(), 5, EtaCombo(1), 10).verdict == Verdict::Proved);
    CHECK(prove_up_identity(kF, 5, EtaCombo(0, {{R(1), kG}}), 10).verdict == Verdict::Proved);
}
