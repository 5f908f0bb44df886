#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "vidreq/core/model.hpp"

namespace vidreq::annotate {

using LabelMap = std::map<std::string, Label>;

struct AgreementReport {
    double kappa = 0.0;
    double observed_agreement = 0.0;
    double expected_agreement = 0.0;
    // confusion[i][j]: rater A said class i, rater B said class j, with
    // index 0 = relevant and 1 = irrelevant.
    std::array<std::array<std::size_t, 2>, 2> confusion{};
    std::vector<std::string> disagreements;  // sorted record ids

    bool operator==(const AgreementReport&) const = default;
};

// Cohen's kappa over two raters. When p_e = 1 the formula is 0/0; kappa is
// then 1.0 if the raters agree everywhere and 0.0 otherwise.
// Throws KeySetMismatch unless both maps cover the same non-empty key set.
AgreementReport compute_kappa(const LabelMap& a, const LabelMap& b);

nlohmann::json to_json(const AgreementReport& r);

}  // namespace vidreq::annotate
