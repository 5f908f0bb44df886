#include "vidreq/relevance/classify.hpp"

#include <cmath>
#include <sstream>

#include <httplib.h>

#include "vidreq/core/error.hpp"

namespace vidreq::relevance {

HttpClassifier::HttpClassifier(const std::string& base_url, std::size_t batch_size)
    : endpoint_(parse_endpoint(base_url)), batch_size_(std::max<std::size_t>(batch_size, 1)), model_id_("external") {
    check_health(endpoint_);
    // A backend may name its model in the health reply.
    httplib::Client cli(endpoint_.origin);
    cli.set_connection_timeout(10, 0);
    if (auto res = cli.Get(endpoint_.prefix + "/healthz"); res && res->status == 200) {
        auto j = nlohmann::json::parse(res->body, nullptr, false);
        if (j.is_object() && j.contains("model_id") && j["model_id"].is_string()) {
            model_id_ = j["model_id"].get<std::string>();
        }
    }
}

std::vector<double> HttpClassifier::score(const std::vector<std::string>& texts) const {
    std::vector<double> out;
    out.reserve(texts.size());
    for (std::size_t begin = 0; begin < texts.size(); begin += batch_size_) {
        const std::size_t end = std::min(texts.size(), begin + batch_size_);
        nlohmann::json body = {{"texts", std::vector<std::string>(texts.begin() + begin, texts.begin() + end)}};
        const auto reply = post_json(endpoint_, "/classify", body);
        if (!reply.is_object() || !reply.contains("scores") || !reply["scores"].is_array()) {
            throw Error(ErrorKind::ContractViolation, "classifier reply lacks a scores array");
        }
        const auto& scores = reply["scores"];
        if (scores.size() != end - begin) {
            throw Error(ErrorKind::ContractViolation, "classifier returned " + std::to_string(scores.size()) +
                                                          " scores for " + std::to_string(end - begin) + " texts");
        }
        for (const auto& s : scores) {
            if (!s.is_number()) throw Error(ErrorKind::ContractViolation, "non-numeric score");
            const double v = s.get<double>();
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
                throw Error(ErrorKind::ContractViolation, "score outside [0, 1]: " + s.dump());
            }
            out.push_back(v);
        }
    }
    return out;
}

Label label_for(double score) { return score >= kDecisionThreshold ? Label::Relevant : Label::Irrelevant; }

std::vector<RelevanceVerdict> classify_corpus(const ScoringBackend& backend, const ingest::BundleIndex& bundles,
                                              const std::vector<VideoRecord>& records, TextVariant variant) {
    if (records.empty()) return {};
    std::vector<std::string> texts;
    texts.reserve(records.size());
    for (const auto& r : records) {
        auto it = bundles.find(r.id);
        if (it != bundles.end()) {
            texts.push_back(assemble_text(it->second, r, variant));
        } else {
            TextBundle empty;
            empty.record_id = r.id;
            texts.push_back(assemble_text(empty, r, variant));
        }
    }
    const auto scores = backend.score(texts);
    if (scores.size() != records.size()) throw Error(ErrorKind::ContractViolation, "score count mismatch");

    std::vector<RelevanceVerdict> out;
    out.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        out.push_back({records[i].id, label_for(scores[i]), scores[i], backend.model_id(), variant,
                       records[i].platform});
    }
    return out;
}

nlohmann::json to_json(const RelevanceVerdict& v) {
    return {
        {"record_id", v.record_id},
        {"label", to_string(v.label)},
        {"score", v.score},
        {"model_id", v.model_id},
        {"variant", to_string(v.variant)},
        {"platform", to_string(v.platform)},
    };
}

RelevanceVerdict verdict_from_json(const nlohmann::json& j) {
    try {
        RelevanceVerdict v;
        v.record_id = j.at("record_id").get<std::string>();
        v.score = j.at("score").get<double>();
        v.model_id = j.at("model_id").get<std::string>();
        auto label = parse_label(j.at("label").get<std::string>());
        auto variant = parse_text_variant(j.at("variant").get<std::string>());
        auto platform = parse_platform(j.at("platform").get<std::string>());
        if (!label || !variant || !platform) throw Error(ErrorKind::InvalidRecord, "verdict: bad enum value");
        v.label = *label;
        v.variant = *variant;
        v.platform = *platform;
        return v;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidRecord, std::string("verdict: ") + e.what());
    }
}

std::string verdicts_to_jsonl(const std::vector<RelevanceVerdict>& verdicts) {
    std::string out;
    for (const auto& v : verdicts) {
        out += to_json(v).dump();
        out += '\n';
    }
    return out;
}

std::vector<RelevanceVerdict> verdicts_from_jsonl(const std::string& text) {
    std::vector<RelevanceVerdict> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(verdict_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorKind::InvalidRecord, std::string("verdicts: ") + e.what());
        }
    }
    return out;
}

}  // namespace vidreq::relevance
