#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace etaprove {

/// Prime factorization by trial division, ascending primes. n >= 1.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);

bool is_prime(std::int64_t n);

/// p-adic valuation of n != 0.
int valuation(std::int64_t n, std::int64_t p);

std::int64_t euler_phi(std::int64_t n);

}  // namespace etaprove
