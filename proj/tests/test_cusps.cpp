#include "etaprove/cusps.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

using namespace etaprove;
using testsupport::ep;
using testsupport::R;

namespace {

std::string joined(const std::vector<Cusp>& cs)
{
    std::string s;
    for (const auto& c : cs)
        s += (s.empty() ? "" : " ") + c.str();
    return s;
}

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

// Canonical representative of (c:d) in P^1(Z/N) under scaling by units.
std::pair<std::int64_t, std::int64_t> proj(std::int64_t c, std::int64_t d, std::int64_t n)
{
    std::pair<std::int64_t, std::int64_t> best{n, n};
    for (std::int64_t u = 1; u <= n; ++u)
        if (std::gcd(u, n) == 1)
            best = std::min(best, {mod(u * c, n), mod(u * d, n)});
    return best;
}

// Orbits of P^1(Z/N) under (c:d) -> (c:c+d); these are the cusps of Gamma0(N)
// and their sizes are the widths.
struct CosetOracle {
    std::map<std::pair<std::int64_t, std::int64_t>, int> orbit_of;
    std::vector<std::int64_t> sizes;

    explicit CosetOracle(std::int64_t n)
    {
        for (std::int64_t c = 0; c < n; ++c)
            for (std::int64_t d = 0; d < n; ++d) {
                if (std::gcd(std::gcd(c, d), n) != 1 && n != 1)
                    continue;
                auto p = proj(c, d, n);
                if (orbit_of.count(p))
                    continue;
                int id = static_cast<int>(sizes.size());
                std::int64_t size = 0;
                auto q = p;
                while (!orbit_of.count(q)) {
                    orbit_of[q] = id;
                    ++size;
                    q = proj(q.first, q.first + q.second, n);
                }
                sizes.push_back(size);
            }
    }

    // Orbit of the coset of a matrix sending oo to b/c.
    int orbit(const Cusp& s, std::int64_t n) const
    {
        std::int64_t b = s.numerator(), c = s.denominator();
        std::int64_t d = 1;
        while (mod(b * d - 1, c) != 0)
            ++d;
        return orbit_of.at(proj(c, d, n));
    }
};

}  // namespace

TEST_CASE("cusp representatives")
{
    CHECK(joined(cusp_set(40)) == "0 1/2 1/4 1/5 1/8 1/10 1/20 1/40");
    CHECK(joined(cusp_set(6)) == "0 1/2 1/3 1/6");
    CHECK(joined(cusp_set(1)) == "0");
    CHECK(joined(finite_cusps(6)) == "0 1/2 1/3");
    CHECK(Cusp(2, 4) == Cusp(1, 2));
    CHECK(Cusp(3, -6) == Cusp(-1, 2));
    CHECK(Cusp::parse("1/4") == Cusp(1, 4));
    CHECK(Cusp::parse("oo").is_infinity());
    CHECK(is_infinity_class(Cusp(1, 6), 6));
    CHECK(is_infinity_class(Cusp::infinity(), 6));
}

TEST_CASE("fan widths")
{
    CHECK(fan_width(Cusp(1, 8), 40) == 5);
    CHECK(fan_width(Cusp(0, 1), 6) == 6);
    CHECK(fan_width(Cusp(1, 2), 6) == 3);
    CHECK(fan_width(Cusp(1, 3), 6) == 2);
    CHECK(fan_width(Cusp(1, 6), 6) == 1);
    for (std::int64_t n = 1; n < 30; ++n)
        CHECK(fan_width(Cusp::infinity(), n) == 1);
}

TEST_CASE("Ligozat orders")
{
    auto e = ep({20, -3, 10, 5, 5, -2, 4, 15, 2, -25, 1, 10});
    CHECK(cusp_ord(e, Cusp(1, 4)) == R(4, 5));
    CHECK(cusp_ORD(e, 20, Cusp(1, 4)) == 4);
    auto cs = cusp_set(20);
    CHECK(format_ords(cusp_ORDS(e, cs, 20)) == "[[0,1],[1/2,-5],[1/4,4],[1/5,0],[1/10,0],[1/20,0]]");
    auto f1 = ep({10, 8, 5, -4, 2, -8, 1, 4});
    CHECK(format_ords(cusp_ORDS(f1, finite_cusps(20), 20)) ==
          "[[0,0],[1/2,-2],[1/4,-2],[1/5,0],[1/10,2]]");
    CHECK(cusp_ord(ep({1, 1}), Cusp::infinity()) == R(1, 24));
    CHECK(cusp_ORDS(e, std::vector<Cusp>{}, 20).empty());
    CHECK(cusp_ORD(EtaProduct(), 12, Cusp(1, 3)) == 0);
    CHECK(cusp_ord(e, Cusp(3, 4)) == cusp_ord(e, Cusp(1, 4)));

    auto sym = ep({1, 1, 2, 1, 3, 1, 6, 1});
    // At 0 the width-normalized order equals the order at infinity of the
    // Fricke partner prod eta((6/d) tau), which is the same product.
    CHECK(cusp_ORD(sym, 6, Cusp(0, 1)) == R(6 + 3 + 2 + 1, 24));
    CHECK(cusp_ORD(sym, 6, Cusp(0, 1)) == cusp_ord(sym, Cusp::infinity()));
}

TEST_CASE("order at infinity matches the expansion")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto e = testsupport::random_quotient(rng, 12, 5);
        auto lt = expand(e, e.order_at_infinity() + 2).leading_term();
        REQUIRE(lt);
        CHECK(lt->exponent == cusp_ord(e, Cusp::infinity()));
    }
}

TEST_CASE("total order vanishes for modular functions")
{
    std::mt19937_64 rng(11);
    int n_cases = 0;
    for (std::int64_t n : {4, 6, 8, 10, 12, 20})
        for (int i = 0; i < 40; ++i, ++n_cases) {
            auto e = testsupport::random_modular(rng, n);
            CHECK(total_ORD(e, n) == 0);
        }
    CHECK(n_cases >= 200);
}

TEST_CASE("cusp counts and widths agree with coset enumeration")
{
    for (std::int64_t n = 1; n <= 60; ++n) {
        auto cs = cusp_set(n);
        std::int64_t phi_sum = 0;
        for (auto d : divisors(n))
            phi_sum += euler_phi(std::gcd(d, n / d));
        CHECK(static_cast<std::int64_t>(cs.size()) == phi_sum);

        std::int64_t width_sum = 0;
        for (const auto& s : cs)
            width_sum += fan_width(s, n);
        Rational index = n;
        for (auto [p, e] : factor(n))
            index *= R(p + 1, p);
        CHECK(Rational(width_sum) == index);

        CosetOracle oracle(n);
        CHECK(oracle.sizes.size() == cs.size());
        std::set<int> seen;
        for (const auto& s : cs) {
            int o = oracle.orbit(s, n);
            CHECK(seen.insert(o).second);
            CHECK(oracle.sizes[o] == fan_width(s, n));
        }
    }
}
