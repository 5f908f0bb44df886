#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "vidreq/core/http.hpp"
#include "vidreq/core/model.hpp"
#include "vidreq/ingest/filter.hpp"
#include "vidreq/relevance/dataset.hpp"
#include "vidreq/relevance/model.hpp"

namespace vidreq::relevance {

inline constexpr const char* kClassifierUrlEnv = "VIDREQ_CLASSIFIER_URL";

// Remote classifier: POST /classify {texts} -> {scores}.
class HttpClassifier final : public ScoringBackend {
public:
    // Runs the health check; throws BackendUnavailable when it fails.
    explicit HttpClassifier(const std::string& base_url, std::size_t batch_size = 64);

    std::string model_id() const override { return model_id_; }
    // Throws ContractViolation when the reply has the wrong cardinality or a
    // score outside [0, 1].
    std::vector<double> score(const std::vector<std::string>& texts) const override;

private:
    Endpoint endpoint_;
    std::size_t batch_size_;
    std::string model_id_;
};

struct RelevanceVerdict {
    std::string record_id;
    Label label = Label::Irrelevant;
    double score = 0.0;
    std::string model_id;
    TextVariant variant = TextVariant::AudioVisual;
    Platform platform = Platform::TikTok;

    bool operator==(const RelevanceVerdict&) const = default;
};

Label label_for(double score);

// One verdict per record in manifest order. Records without a bundle are
// scored on their metadata alone. Backend failures propagate; nothing is
// returned for a partially scored batch.
std::vector<RelevanceVerdict> classify_corpus(const ScoringBackend& backend, const ingest::BundleIndex& bundles,
                                              const std::vector<VideoRecord>& records, TextVariant variant);

nlohmann::json to_json(const RelevanceVerdict& v);
RelevanceVerdict verdict_from_json(const nlohmann::json& j);

std::string verdicts_to_jsonl(const std::vector<RelevanceVerdict>& verdicts);
std::vector<RelevanceVerdict> verdicts_from_jsonl(const std::string& text);

}  // namespace vidreq::relevance
