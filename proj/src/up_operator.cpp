#include "etaprove/up_operator.hpp"

#include "etaprove/arith.hpp"
#include "etaprove/modularity.hpp"

#include <algorithm>

namespace etaprove {

namespace {

void require_prime_divisor(std::int64_t p, std::int64_t level)
{
    if (!is_prime(p))
        throw PrecondFailed(std::to_string(p) + " is not prime");
    if (level < 1 || level % p != 0)
        throw PrecondFailed(std::to_string(p) + " does not divide the level " +
                            std::to_string(level));
}

}  // namespace

QSeries up_series(const QSeries& a, std::int64_t p)
{
    if (!is_prime(p))
        throw PrecondFailed("U_p needs a prime p, got " + std::to_string(p));
    return sift(a, p, 0);
}

UpBoundCase up_bound_case(std::int64_t delta, std::int64_t level, std::int64_t p)
{
    const int nu_delta = valuation(delta, p);
    const int nu_level = valuation(level, p);
    if (2 * nu_delta >= nu_level)
        return UpBoundCase::Scaled;
    if (nu_delta > 0)
        return UpBoundCase::Direct;
    return UpBoundCase::MinOverShifts;
}

Rational up_lower_bound(const EtaProduct& ep, const Cusp& r, std::int64_t level, std::int64_t p)
{
    require_prime_divisor(p, level);
    const std::int64_t beta = r.is_infinity() ? 1 : r.numerator();
    const std::int64_t delta = r.is_infinity() ? level : r.denominator();
    if (level % delta != 0)
        throw PrecondFailed("cusp " + r.str() + " has denominator not dividing " +
                            std::to_string(level));
    const std::int64_t big = p * level;
    if (!gamma_check(ep, big).invariant())
        throw PrecondFailed(ep.str() + " is not a modular function on Gamma0(" +
                            std::to_string(big) + ")");

    switch (up_bound_case(delta, level, p)) {
    case UpBoundCase::Scaled:
        return cusp_ORD(ep, big, Cusp(beta, p * delta)) / Rational(p);
    case UpBoundCase::Direct:
        return cusp_ORD(ep, big, Cusp(beta, p * delta));
    case UpBoundCase::MinOverShifts: {
        Rational lo = cusp_ORD(ep, big, Cusp(beta, p * delta));
        for (std::int64_t k = 1; k < p; ++k)
            lo = std::min(lo, cusp_ORD(ep, big, Cusp(beta + k * delta, p * delta)));
        return lo;
    }
    }
    return Rational(0);
}

OrdVector up_lower_bounds(const EtaProduct& ep, std::int64_t level, std::int64_t p)
{
    OrdVector out;
    for (const auto& s : finite_cusps(level))
        out.push_back({s, up_lower_bound(ep, s, level, p)});
    return out;
}

ProofReport prove_up_identity(const EtaProduct& ep, std::int64_t p, const EtaCombo& rhs,
                              std::int64_t level, const ProveOptions& opts)
{
    if (level < 1)
        throw std::invalid_argument("level must be positive");
    ProofReport report;
    report.level = level;
    report.identity = rhs;
    report.up_prime = p;
    report.up_source = ep;
    report.constants_warning = !rhs.constant().is_zero();

    try {
        require_prime_divisor(p, level);
    } catch (const PrecondFailed& e) {
        report.verdict = Verdict::NotApplicable;
        report.reasons.push_back(e.what());
        return report;
    }

    const std::int64_t big = p * level;
    if (!gamma_check(ep, big).invariant())
        report.reasons.push_back(ep.str() + " is not a modular function on Gamma0(" +
                                 std::to_string(big) + ")");
    else if (Rational tot = total_ORD(ep, big); !tot.is_zero())
        report.reasons.push_back(ep.str() + " has total order " + tot.str() + ", not 0");
    const auto terms = rhs.terms();
    for (std::size_t j = 0; j < terms.size(); ++j) {
        if (!gamma_check(terms[j].product, level).invariant())
            report.reasons.push_back("term f" + std::to_string(j + 1) + " = " +
                                     terms[j].product.str() +
                                     " is not a modular function on Gamma0(" +
                                     std::to_string(level) + ")");
        else if (Rational tot = total_ORD(terms[j].product, level); !tot.is_zero())
            report.reasons.push_back("term f" + std::to_string(j + 1) + " has total order " +
                                     tot.str() + ", not 0");
    }
    if (!report.reasons.empty()) {
        report.verdict = Verdict::NotApplicable;
        return report;
    }

    report.cusps = finite_cusps(level);
    OrdMatrix bound_rows;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        OrdRow row{"f" + std::to_string(j + 1), cusp_ORDS(terms[j].product, report.cusps, level)};
        bound_rows.push_back(row.ords);
        report.rows.push_back(std::move(row));
    }
    if (!rhs.constant().is_zero()) {
        OrdVector zero_row;
        for (const auto& s : report.cusps)
            zero_row.push_back({s, Rational(0)});
        bound_rows.push_back(std::move(zero_row));
    }
    OrdRow up_row{"L(g)", up_lower_bounds(ep, level, p)};
    bound_rows.push_back(up_row.ords);
    report.rows.push_back(std::move(up_row));

    detail::finish_report(report, bound_rows, opts, [&](std::int64_t depth) {
        QSeries lhs = up_series(expand(ep, Rational(p * depth)), p);
        return series_sub(lhs, combo_expand(rhs, Rational(depth)));
    });
    return report;
}

}  // namespace etaprove
