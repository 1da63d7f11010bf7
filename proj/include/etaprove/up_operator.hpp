#pragma once

#include "etaprove/cusps.hpp"
#include "etaprove/eta_product.hpp"
#include "etaprove/prover.hpp"
#include "etaprove/qseries.hpp"

#include <cstdint>
#include <stdexcept>

namespace etaprove {

struct PrecondFailed : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// U_p: sum a(pn) q^n. Throws FractionalExponent, or std::invalid_argument for
/// composite p.
QSeries up_series(const QSeries& a, std::int64_t p);

/// Which Gordon-Hughes bound applies at a cusp with denominator delta | N.
enum class UpBoundCase {
    Scaled,        ///< nu_p(delta) >= nu_p(N)/2: (1/p) ORD(f, r/p)
    Direct,        ///< 0 < nu_p(delta) < nu_p(N)/2: ORD(f, r/p)
    MinOverShifts, ///< nu_p(delta) = 0: min_k ORD(f, (r+k)/p)
};

UpBoundCase up_bound_case(std::int64_t delta, std::int64_t level, std::int64_t p);

/// Lower bound for ORD(U_p f, r, Gamma0(N)) where f = ep is a modular function
/// on Gamma0(pN). Orders of f are taken on Gamma0(pN) at reduced cusps.
/// Throws PrecondFailed if p is not a prime dividing N, the cusp denominator
/// does not divide N, or ep is not modular on Gamma0(pN).
Rational up_lower_bound(const EtaProduct& ep, const Cusp& r, std::int64_t level, std::int64_t p);

/// Bounds at every cusp of finite_cusps(N).
OrdVector up_lower_bounds(const EtaProduct& ep, std::int64_t level, std::int64_t p);

/// Proves U_p(ep) = rhs on Gamma0(N).
ProofReport prove_up_identity(const EtaProduct& ep, std::int64_t p, const EtaCombo& rhs,
                              std::int64_t level, const ProveOptions& opts = {});

}  // namespace etaprove
