#include "etaprove/prover.hpp"

#include "etaprove/modularity.hpp"

#include <algorithm>
#include <sstream>

namespace etaprove {

EtaCombo normalize_identity(std::span<const EtaTerm> terms)
{
    std::vector<EtaTerm> live;
    for (const auto& t : terms)
        if (!t.coeff.is_zero())
            live.push_back(t);
    if (live.empty())
        throw EmptyIdentity("identity has no nonzero term");
    const EtaTerm first = live.front();
    for (auto& t : live) {
        t.coeff /= first.coeff;
        t.product = t.product / first.product;
    }
    return EtaCombo(Rational(0), std::move(live));
}

EtaCombo normalize_identity(const EtaCombo& combo)
{
    return normalize_identity(combo.as_terms());
}

Rational min_total_ORDS(const OrdMatrix& m)
{
    if (m.empty())
        throw MisalignedRows("ORD matrix has no rows");
    const std::size_t cols = m.front().size();
    for (const auto& row : m) {
        if (row.size() != cols)
            throw MisalignedRows("ORD rows have different lengths");
        for (std::size_t c = 0; c < cols; ++c)
            if (!(row[c].cusp == m.front()[c].cusp))
                throw MisalignedRows("ORD rows list different cusps in column " +
                                     std::to_string(c + 1));
    }
    Rational total;
    for (std::size_t c = 0; c < cols; ++c) {
        Rational lo = m.front()[c].ord;
        for (const auto& row : m)
            lo = std::min(lo, row[c].ord);
        total += lo;
    }
    return total;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Proved:
        return "PROVED";
    case Verdict::Refuted:
        return "REFUTED";
    case Verdict::NotApplicable:
        return "NOT-APPLICABLE";
    case Verdict::InternalInconsistency:
        return "INTERNAL-INCONSISTENCY";
    case Verdict::BoundOnly:
        return "NOT-VERIFIED (bound only)";
    }
    return "?";
}

namespace detail {

void finish_report(ProofReport& report, const OrdMatrix& bound_rows, const ProveOptions& opts,
                   const std::function<QSeries(std::int64_t)>& difference)
{
    if (opts.check_margin < 0)
        throw std::invalid_argument("check margin must be nonnegative");
    report.lower_bound.clear();
    for (std::size_t c = 0; c < report.cusps.size(); ++c) {
        Rational lo = bound_rows.front()[c].ord;
        for (const auto& row : bound_rows)
            lo = std::min(lo, row[c].ord);
        report.lower_bound.push_back({report.cusps[c], lo});
    }
    report.bound = report.cusps.empty() ? Rational(0) : min_total_ORDS(bound_rows);
    report.required_depth = to_int64((-report.bound).floor());
    if (!opts.verify) {
        report.verdict = Verdict::BoundOnly;
        return;
    }

    const std::int64_t depth = report.required_depth + opts.check_margin + 1;
    QSeries h = difference(depth);
    if (h.trunc() < Rational(depth))
        throw std::logic_error("expansion of the identity stopped at O(q^" + h.trunc().str() +
                               "), needed O(q^" + std::to_string(depth) + ")");
    report.checked_depth = depth - 1;
    auto lead = h.truncated(Rational(depth)).leading_term();
    if (!lead) {
        report.verdict = Verdict::Proved;
        return;
    }
    report.first_nonzero = Coefficient{lead->exponent, lead->coeff};
    report.verdict = lead->exponent <= Rational(report.required_depth)
                         ? Verdict::Refuted
                         : Verdict::InternalInconsistency;
}

}  // namespace detail

ProofReport prove_gamma0_identity(const EtaCombo& identity, std::int64_t level,
                                  const ProveOptions& opts)
{
    if (level < 1)
        throw std::invalid_argument("level must be positive");
    ProofReport report;
    report.level = level;
    report.identity = identity.as_terms().empty() ? identity : normalize_identity(identity);
    report.constants_warning = !report.identity.constant().is_zero();

    const auto terms = report.identity.terms();
    for (std::size_t j = 0; j < terms.size(); ++j) {
        auto v = gamma_check(terms[j].product, level);
        if (v.invariant())
            continue;
        std::string failed;
        for (int c = 1; c <= 5; ++c)
            if (!v.holds(c))
                failed += (failed.empty() ? "(" : ",(") + std::to_string(c) + ")";
        report.reasons.push_back("term f" + std::to_string(j + 1) + " = " +
                                 terms[j].product.str() +
                                 " is not a modular function on Gamma0(" +
                                 std::to_string(level) + "): condition " + failed + " fails");
    }
    if (report.reasons.empty()) {
        for (std::size_t j = 0; j < terms.size(); ++j) {
            Rational total = total_ORD(terms[j].product, level);
            if (!total.is_zero())
                report.reasons.push_back("term f" + std::to_string(j + 1) +
                                         " has total order " + total.str() + ", not 0");
        }
    }
    if (!report.reasons.empty()) {
        report.verdict = Verdict::NotApplicable;
        return report;
    }

    report.cusps = finite_cusps(level);
    OrdMatrix bound_rows;
    OrdVector zero_row;
    for (const auto& s : report.cusps)
        zero_row.push_back({s, Rational(0)});
    bound_rows.push_back(zero_row);
    for (std::size_t j = 0; j < terms.size(); ++j) {
        OrdRow row{"f" + std::to_string(j + 1), cusp_ORDS(terms[j].product, report.cusps, level)};
        bound_rows.push_back(row.ords);
        report.rows.push_back(std::move(row));
    }
    const EtaCombo& id = report.identity;
    detail::finish_report(report, bound_rows, opts, [&id](std::int64_t depth) {
        return combo_expand(id, Rational(depth));
    });
    return report;
}

std::string ord_table(const ProofReport& report)
{
    const std::string fn = report.up_prime ? "h" : "g";
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"zeta"};
    for (const auto& row : report.rows)
        header.push_back("ORD(" + row.label + ",zeta)");
    header.push_back("Lower bound for ORD(" + fn + ",zeta)");
    cells.push_back(header);
    for (std::size_t c = 0; c < report.cusps.size(); ++c) {
        std::vector<std::string> line{report.cusps[c].str()};
        for (const auto& row : report.rows)
            line.push_back(row.ords[c].ord.str());
        line.push_back(c < report.lower_bound.size() ? report.lower_bound[c].ord.str() : "");
        cells.push_back(line);
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : cells)
        for (std::size_t k = 0; k < line.size(); ++k)
            width[k] = std::max(width[k], line[k].size());

    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t k = 0; k < line.size(); ++k) {
            if (k)
                os << " | ";
            os << std::string(width[k] - line[k].size(), ' ') << line[k];
        }
        os << "\n";
    };
    emit(cells.front());
    for (std::size_t k = 0; k < width.size(); ++k) {
        if (k)
            os << "-+-";
        os << std::string(width[k], '-');
    }
    os << "\n";
    for (std::size_t i = 1; i < cells.size(); ++i)
        emit(cells[i]);
    return os.str();
}

}  // namespace etaprove
