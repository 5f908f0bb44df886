#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "vidreq/core/model.hpp"
#include "vidreq/relevance/dataset.hpp"
#include "vidreq/relevance/model.hpp"

namespace vidreq::relevance {

struct Confusion {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;

    std::size_t total() const { return tp + fp + tn + fn; }
    bool operator==(const Confusion&) const = default;
};

struct EvalReport {
    double accuracy = 0.0;
    double auc = 0.0;
    std::size_t n_test = 0;
    Confusion confusion;
    DatasetVariant dataset;
    std::string model_id;
};

// Mann-Whitney statistic: share of (positive, negative) pairs in which the
// positive scores higher, ties counting one half. Computed from mid-ranks,
// which gives the same value as explicit pair counting.
// Throws InsufficientClassData unless both classes are present.
double auc_mann_whitney(std::span<const double> scores, std::span<const Label> labels);

Confusion confusion_at(std::span<const double> scores, std::span<const Label> labels,
                       double threshold = kDecisionThreshold);

// Throws EmptyTestSet for an empty test set.
EvalReport evaluate(const ScoringBackend& backend, const std::vector<LabeledExample>& test,
                    const DatasetVariant& dataset);

nlohmann::json to_json(const EvalReport& r);

}  // namespace vidreq::relevance
