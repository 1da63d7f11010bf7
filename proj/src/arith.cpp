#include "etaprove/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace etaprove {

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("factor: argument must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d)
                out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

int valuation(std::int64_t n, std::int64_t p)
{
    if (n == 0)
        throw std::invalid_argument("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t r = n;
    for (const auto& [p, e] : factor(n))
        r = r / p * (p - 1);
    return r;
}

}  // namespace etaprove
