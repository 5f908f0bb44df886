#include "vidreq/relevance/evaluate.hpp"

#include <algorithm>
#include <numeric>

#include "vidreq/core/error.hpp"

namespace vidreq::relevance {

double auc_mann_whitney(std::span<const double> scores, std::span<const Label> labels) {
    if (scores.size() != labels.size()) throw Error(ErrorKind::LengthMismatch, "scores vs labels");
    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Mid-ranks (1-based); tied scores share the mean of their rank positions.
    std::vector<double> rank(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
        const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mid;
        i = j + 1;
    }

    double rank_sum = 0.0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] == Label::Relevant) {
            rank_sum += rank[i];
            ++pos;
        }
    }
    const std::size_t neg = n - pos;
    if (pos == 0 || neg == 0) throw Error(ErrorKind::InsufficientClassData, "AUC needs both classes");
    const double u = rank_sum - 0.5 * static_cast<double>(pos) * static_cast<double>(pos + 1);
    return u / (static_cast<double>(pos) * static_cast<double>(neg));
}

Confusion confusion_at(std::span<const double> scores, std::span<const Label> labels, double threshold) {
    Confusion c;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const bool predicted = scores[i] >= threshold;
        const bool actual = labels[i] == Label::Relevant;
        if (predicted && actual) ++c.tp;
        else if (predicted) ++c.fp;
        else if (actual) ++c.fn;
        else ++c.tn;
    }
    return c;
}

EvalReport evaluate(const ScoringBackend& backend, const std::vector<LabeledExample>& test,
                    const DatasetVariant& dataset) {
    if (test.empty()) throw Error(ErrorKind::EmptyTestSet, "no test examples");
    std::vector<std::string> texts;
    std::vector<Label> labels;
    for (const auto& e : test) {
        texts.push_back(e.text);
        labels.push_back(e.label);
    }
    const auto scores = backend.score(texts);
    if (scores.size() != texts.size()) throw Error(ErrorKind::ContractViolation, "score count mismatch");

    EvalReport r;
    r.n_test = test.size();
    r.confusion = confusion_at(scores, labels);
    r.accuracy = static_cast<double>(r.confusion.tp + r.confusion.tn) / static_cast<double>(r.n_test);
    r.auc = auc_mann_whitney(scores, labels);
    r.dataset = dataset;
    r.model_id = backend.model_id();
    return r;
}

nlohmann::json to_json(const EvalReport& r) {
    return {
        {"accuracy", r.accuracy},
        {"auc", r.auc},
        {"n_test", r.n_test},
        {"confusion", {{"tp", r.confusion.tp}, {"fp", r.confusion.fp}, {"tn", r.confusion.tn}, {"fn", r.confusion.fn}}},
        {"dataset", {{"variant", to_string(r.dataset.variant)}, {"platform", to_string(r.dataset.platform)}}},
        {"model_id", r.model_id},
    };
}

}  // namespace vidreq::relevance
