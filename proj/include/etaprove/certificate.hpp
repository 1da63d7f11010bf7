#pragma once

#include "etaprove/prover.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace etaprove {

inline constexpr const char* kToolName = "etaprove";
inline constexpr const char* kToolVersion = "1.0.0";

/// Canonical JSON certificate for a proof report. Keys are sorted and all
/// rationals are written as "p/q" strings, so equal inputs give equal bytes.
std::string certificate_json(const ProofReport& report, std::string_view input_text,
                             std::int64_t margin);

}  // namespace etaprove
