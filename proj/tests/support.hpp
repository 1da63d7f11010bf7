#pragma once

#include "etaprove/arith.hpp"
#include "etaprove/eta_product.hpp"
#include "etaprove/modularity.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

inline etaprove::EtaProduct ep(std::initializer_list<std::int64_t> flat)
{
    std::vector<std::int64_t> v(flat);
    return etaprove::EtaProduct::from_list(v);
}

inline etaprove::Rational R(std::int64_t n, std::int64_t d = 1)
{
    return etaprove::Rational(etaprove::Integer(static_cast<long>(n)),
                              etaprove::Integer(static_cast<long>(d)));
}

// Random eta-quotient supported on the divisors of N with exponent sum zero.
inline etaprove::EtaProduct random_quotient(std::mt19937_64& rng, std::int64_t level, int span)
{
    auto ds = etaprove::divisors(level);
    std::uniform_int_distribution<int> dist(-span, span);
    std::vector<etaprove::EtaFactor> fs;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
        int r = dist(rng);
        sum += r;
        fs.push_back({ds[i], r});
    }
    fs.push_back({ds.back(), -sum});
    return etaprove::EtaProduct(fs);
}

// Rejection sampling until gamma_check passes.
inline etaprove::EtaProduct random_modular(std::mt19937_64& rng, std::int64_t level, int span = 24)
{
    for (;;) {
        auto e = random_quotient(rng, level, span);
        if (!e.empty() && etaprove::gamma_check(e, level).invariant())
            return e;
    }
}

}  // namespace testsupport
