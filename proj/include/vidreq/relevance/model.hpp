#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "vidreq/relevance/dataset.hpp"
#include "vidreq/relevance/tfidf.hpp"

namespace vidreq::relevance {

inline constexpr double kDecisionThreshold = 0.5;

// Anything that maps texts to relevance scores in [0, 1].
class ScoringBackend {
public:
    virtual ~ScoringBackend() = default;
    virtual std::string model_id() const = 0;
    virtual std::vector<double> score(const std::vector<std::string>& texts) const = 0;
};

struct TrainingOptions {
    double l2 = 1.0;           // penalty 0.5 * l2 * |w|^2, intercept included
    double tolerance = 1e-6;   // stop when the max-norm of the gradient drops below
    int max_iterations = 10000;
    std::size_t min_df = 2;
};

// In-repo classifier: TF-IDF features and L2-regularized logistic regression
// fitted by L-BFGS.
class ReferenceModel final : public ScoringBackend {
public:
    static constexpr const char* kModelId = "reference";

    // Throws InsufficientClassData unless both labels occur.
    static ReferenceModel train(const std::vector<LabeledExample>& train, std::uint64_t seed,
                                const TrainingOptions& options = {});

    std::string model_id() const override { return kModelId; }
    std::vector<double> score(const std::vector<std::string>& texts) const override;
    double score(const std::string& text) const;

    const TfidfVectorizer& features() const { return features_; }
    const std::vector<double>& weights() const { return weights_; }
    double bias() const { return bias_; }
    int iterations() const { return iterations_; }
    double final_gradient_norm() const { return gradient_norm_; }

    nlohmann::json to_json() const;
    static ReferenceModel from_json(const nlohmann::json& j);

private:
    TfidfVectorizer features_;
    std::vector<double> weights_;
    double bias_ = 0.0;
    int iterations_ = 0;
    double gradient_norm_ = 0.0;
    std::uint64_t seed_ = 0;
    TrainingOptions options_;
};

}  // namespace vidreq::relevance
