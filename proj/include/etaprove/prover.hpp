#pragma once

#include "etaprove/cusps.hpp"
#include "etaprove/eta_product.hpp"
#include "etaprove/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace etaprove {

struct EmptyIdentity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MisalignedRows : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Divides every term by the first one (a nonzero constant counts as the
/// first term), giving constant + sum alpha_j f_j. Throws EmptyIdentity when
/// no nonzero term is present.
EtaCombo normalize_identity(std::span<const EtaTerm> terms);
EtaCombo normalize_identity(const EtaCombo& combo);

/// Rows of cusp orders over a common cusp sequence.
using OrdMatrix = std::vector<OrdVector>;

/// Sum over cusp columns of the columnwise minimum.
Rational min_total_ORDS(const OrdMatrix& m);

enum class Verdict {
    Proved,
    Refuted,
    NotApplicable,
    /// Vanishes through the required depth but not in the margin: the bound
    /// was wrong, which means a bug.
    InternalInconsistency,
    /// Bound computed, expansion not run.
    BoundOnly,
};

std::string to_string(Verdict v);

struct Coefficient {
    Rational exponent;
    Rational value;
};

struct OrdRow {
    std::string label;
    OrdVector ords;
};

struct ProveOptions {
    std::int64_t check_margin = 10;
    bool verify = true;
};

struct ProofReport {
    std::int64_t level = 1;
    Verdict verdict = Verdict::NotApplicable;
    std::vector<std::string> reasons;
    /// First nonvanishing coefficient of the difference, when one was found.
    std::optional<Coefficient> first_nonzero;

    Rational bound;
    /// Coefficients of q^e for e <= required_depth must vanish.
    std::int64_t required_depth = 0;
    /// Coefficients were checked through q^checked_depth; -1 if no expansion ran.
    std::int64_t checked_depth = -1;

    std::vector<Cusp> cusps;
    /// One row per displayed term, columns aligned with `cusps`.
    std::vector<OrdRow> rows;
    /// Columnwise lower bound for the order of the difference; sums to `bound`.
    OrdVector lower_bound;
    bool constants_warning = false;

    /// Identity that was proved (normalized for linear identities).
    EtaCombo identity;

    /// U_p identities only.
    std::optional<std::int64_t> up_prime;
    std::optional<EtaProduct> up_source;

    bool proved() const { return verdict == Verdict::Proved; }
};

/// Proves  constant + sum alpha_j f_j = 0  on Gamma0(N) with the valence formula.
ProofReport prove_gamma0_identity(const EtaCombo& identity, std::int64_t level,
                                  const ProveOptions& opts = {});

/// Plain-text table: one row per non-infinity cusp, one column per term, and
/// a final "Lower bound" column.
std::string ord_table(const ProofReport& report);

namespace detail {

/// Shared STEP 4-5 logic: lower-bound row, B, depth and coefficient scan.
void finish_report(ProofReport& report, const OrdMatrix& bound_rows, const ProveOptions& opts,
                   const std::function<QSeries(std::int64_t)>& difference);

}  // namespace detail

}  // namespace etaprove
