#include "etaprove/modularity.hpp"

#include "etaprove/arith.hpp"

#include <map>
#include <sstream>

namespace etaprove {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    return ((a % m) + m) % m;
}

// prime -> sum_j v_p(t_j) |r_j|
std::map<std::int64_t, std::int64_t> abs_exponents(const EtaProduct& ep)
{
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& f : ep.factors())
        for (const auto& [p, e] : factor(f.t))
            out[p] += e * (f.r < 0 ? -f.r : f.r);
    return out;
}

}  // namespace

bool ModularityVerdict::invariant() const
{
    for (bool c : conditions)
        if (!c)
            return false;
    return true;
}

std::string ModularityVerdict::report() const
{
    std::ostringstream os;
    for (int i = 0; i < 5; ++i)
        os << "Condition (" << i + 1 << ") " << (conditions[i] ? "holds" : "does not hold") << "\n";
    os << "function is " << (invariant() ? "invariant" : "NOT invariant") << "\n";
    return os.str();
}

ModularityVerdict gamma_check(const EtaProduct& ep, std::int64_t level)
{
    if (level < 1)
        throw std::invalid_argument("level must be positive");
    std::int64_t sum_r = 0, sum_tr = 0, sum_ntr = 0;
    bool divides = true;
    for (const auto& f : ep.factors()) {
        sum_r += f.r;
        sum_tr += f.t * f.r;
        if (f.r == 0 || level % f.t != 0) {
            divides = false;
            continue;
        }
        sum_ntr += (level / f.t) * f.r;
    }
    bool square = true;
    for (const auto& [p, e] : abs_exponents(ep))
        if (e % 2 != 0)
            square = false;

    ModularityVerdict v;
    v.conditions[0] = sum_r == 0;
    v.conditions[1] = mod(sum_tr, 24) == 0;
    v.conditions[2] = square;
    v.conditions[3] = divides;
    // N/t is only an integer when (4) holds; otherwise use the exact rational sum.
    if (divides) {
        v.conditions[4] = mod(sum_ntr, 24) == 0;
    } else {
        Rational s;
        for (const auto& f : ep.factors())
            s += Rational(level * f.r) / Rational(f.t);
        v.conditions[4] = s.is_integer() && mod(to_int64(s.num()), 24) == 0;
    }
    return v;
}

std::variant<FormVerdict, NotAForm> form_check(const EtaProduct& ep, std::int64_t level)
{
    if (level < 1)
        throw std::invalid_argument("level must be positive");
    NotAForm fail;
    std::int64_t sum_r = 0, sum_tr = 0, sum_ntr = 0;
    for (const auto& f : ep.factors()) {
        sum_r += f.r;
        sum_tr += f.t * f.r;
        if (level % f.t != 0)
            fail.reasons.push_back(std::to_string(f.t) + " does not divide " +
                                   std::to_string(level));
        else
            sum_ntr += (level / f.t) * f.r;
    }
    if (mod(sum_tr, 24) != 0)
        fail.reasons.push_back("sum t*r = " + std::to_string(sum_tr) + " is not 0 mod 24");
    if (fail.reasons.empty() && mod(sum_ntr, 24) != 0)
        fail.reasons.push_back("sum (N/t)*r = " + std::to_string(sum_ntr) + " is not 0 mod 24");
    if (sum_r < 0)
        fail.reasons.push_back("negative weight " + Rational(sum_r, 2).str());
    if (!fail.reasons.empty())
        return fail;

    FormVerdict v;
    v.level = level;
    v.weight = Rational(sum_r) / 2;
    v.half_integral_weight = sum_r % 2 != 0;
    // (-1)^k; for half-integral k the integer part is used.
    std::int64_t k_int = sum_r / 2;
    Integer cleared = 1, kernel = 1;
    for (const auto& [p, e] : abs_exponents(ep)) {
        Integer pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
        cleared *= pe;
        if (e % 2 != 0)
            kernel *= p;
    }
    if (k_int % 2 != 0) {
        cleared = -cleared;
        kernel = -kernel;
    }
    v.cleared = cleared;
    v.kernel = kernel;
    Integer r = kernel % 4;
    if (r < 0)
        r += 4;
    v.character_disc = (r == 1) ? kernel : Integer(4 * kernel);
    return v;
}

int kronecker(std::int64_t a, std::int64_t n)
{
    static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (a == 0 && n == 0)
        throw UndefinedSymbol("Kronecker symbol (0/0) is undefined");
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0)
        return 0;
    int k = 1;
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v % 2 != 0)
        k = tab2[a & 7];
    if (n < 0) {
        n = -n;
        if (a < 0)
            k = -k;
    }
    // n odd and positive: Jacobi symbol of a mod n.
    a = mod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int r = static_cast<int>(n & 7);
            if (r == 3 || r == 5)
                k = -k;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3)
            k = -k;
        a = mod(a, n);
    }
    return n == 1 ? k : 0;
}

}  // namespace etaprove
