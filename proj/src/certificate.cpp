#include "etaprove/certificate.hpp"

#include <json.hpp>

namespace etaprove {

std::string certificate_json(const ProofReport& report, std::string_view input_text,
                             std::int64_t margin)
{
    using nlohmann::json;
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["kind"] = report.up_prime ? "up" : "gamma0";
    j["input"] = std::string(input_text);
    j["identity"] = report.identity.str();
    j["level"] = report.level;
    if (report.up_prime) {
        j["prime"] = *report.up_prime;
        j["source"] = report.up_source->str();
    }
    j["verdict"] = to_string(report.verdict);
    j["reasons"] = report.reasons;
    j["margin"] = margin;
    if (report.verdict == Verdict::NotApplicable) {
        j["B"] = nullptr;
        j["required_depth"] = nullptr;
    } else {
        j["B"] = report.bound.str();
        j["required_depth"] = report.required_depth;
    }
    j["checked_depth"] = report.checked_depth;
    j["constants_warning"] = report.constants_warning;

    json cusps = json::array();
    for (const auto& s : report.cusps)
        cusps.push_back(s.str());
    j["cusps"] = cusps;

    json rows = json::array();
    auto terms = report.identity.terms();
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        json row;
        row["label"] = report.rows[i].label;
        if (i < terms.size()) {
            row["coefficient"] = terms[i].coeff.str();
            row["product"] = terms[i].product.str();
        }
        json ords = json::array();
        for (const auto& e : report.rows[i].ords)
            ords.push_back(e.ord.str());
        row["ords"] = ords;
        rows.push_back(row);
    }
    j["ord_table"] = rows;

    json bound = json::array();
    for (const auto& e : report.lower_bound)
        bound.push_back(e.ord.str());
    j["lower_bound"] = bound;

    if (report.first_nonzero)
        j["first_nonzero"] = {{"exponent", report.first_nonzero->exponent.str()},
                              {"coefficient", report.first_nonzero->value.str()}};
    else
        j["first_nonzero"] = nullptr;
    return j.dump(2) + "\n";
}

}  // namespace etaprove
