#include "vidreq/annotate/agreement.hpp"

#include "vidreq/core/error.hpp"

namespace vidreq::annotate {

namespace {

std::size_t index_of(Label l) { return l == Label::Relevant ? 0 : 1; }

}  // namespace

AgreementReport compute_kappa(const LabelMap& a, const LabelMap& b) {
    if (a.empty() || b.empty()) throw Error(ErrorKind::KeySetMismatch, "no labels to compare");
    if (a.size() != b.size()) {
        throw Error(ErrorKind::KeySetMismatch,
                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " labeled records");
    }
    AgreementReport r;
    auto ib = b.begin();
    for (auto ia = a.begin(); ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first) {
            throw Error(ErrorKind::KeySetMismatch, "record '" + ia->first + "' vs '" + ib->first + "'");
        }
        ++r.confusion[index_of(ia->second)][index_of(ib->second)];
        if (ia->second != ib->second) r.disagreements.push_back(ia->first);
    }

    const double n = static_cast<double>(a.size());
    r.observed_agreement = static_cast<double>(r.confusion[0][0] + r.confusion[1][1]) / n;
    double pe = 0.0;
    for (std::size_t c = 0; c < 2; ++c) {
        const double row = static_cast<double>(r.confusion[c][0] + r.confusion[c][1]) / n;
        const double col = static_cast<double>(r.confusion[0][c] + r.confusion[1][c]) / n;
        pe += row * col;
    }
    r.expected_agreement = pe;
    if (pe >= 1.0) {
        r.kappa = r.observed_agreement >= 1.0 ? 1.0 : 0.0;
    } else {
        r.kappa = (r.observed_agreement - pe) / (1.0 - pe);
    }
    return r;
}

nlohmann::json to_json(const AgreementReport& r) {
    return {
        {"kappa", r.kappa},
        {"observed_agreement", r.observed_agreement},
        {"expected_agreement", r.expected_agreement},
        {"confusion", {{r.confusion[0][0], r.confusion[0][1]}, {r.confusion[1][0], r.confusion[1][1]}}},
        {"disagreements", r.disagreements},
    };
}

}  // namespace vidreq::annotate
