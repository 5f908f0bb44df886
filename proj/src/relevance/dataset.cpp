#include "vidreq/relevance/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "vidreq/core/error.hpp"
#include "vidreq/core/rng.hpp"
#include "vidreq/core/text.hpp"

namespace vidreq::relevance {

std::string_view to_string(TextVariant v) {
    switch (v) {
    case TextVariant::AudioOnly: return "audio";
    case TextVariant::VisualOnly: return "visual";
    case TextVariant::AudioVisual: return "both";
    }
    return "both";
}

std::string_view to_string(PlatformScope p) {
    switch (p) {
    case PlatformScope::TikTok: return "TikTok";
    case PlatformScope::YouTube: return "YouTube";
    case PlatformScope::Both: return "Both";
    }
    return "Both";
}

std::optional<TextVariant> parse_text_variant(std::string_view s) {
    if (s == "audio" || s == "AudioOnly") return TextVariant::AudioOnly;
    if (s == "visual" || s == "VisualOnly") return TextVariant::VisualOnly;
    if (s == "both" || s == "AudioVisual") return TextVariant::AudioVisual;
    return std::nullopt;
}

std::optional<PlatformScope> parse_platform_scope(std::string_view s) {
    if (s == "TikTok" || s == "tiktok") return PlatformScope::TikTok;
    if (s == "YouTube" || s == "youtube") return PlatformScope::YouTube;
    if (s == "Both" || s == "both") return PlatformScope::Both;
    return std::nullopt;
}

bool in_scope(Platform p, PlatformScope scope) {
    if (scope == PlatformScope::Both) return true;
    return (p == Platform::TikTok) == (scope == PlatformScope::TikTok);
}

std::string assemble_text(const TextBundle& bundle, const VideoRecord& record, TextVariant variant) {
    if (bundle.record_id != record.id) {
        throw Error(ErrorKind::RecordMismatch, "bundle '" + bundle.record_id + "' for record '" + record.id + "'");
    }
    std::vector<std::string> visual;
    for (const auto& l : bundle.visual_lines) visual.push_back(l.text);
    const std::string visual_text = join(visual, " ");

    std::string out = record.title;
    out += kFieldSeparator;
    out += record.description;
    out += kFieldSeparator;
    switch (variant) {
    case TextVariant::AudioOnly: out += bundle.audio_text; break;
    case TextVariant::VisualOnly: out += visual_text; break;
    case TextVariant::AudioVisual:
        out += bundle.audio_text;
        out += kFieldSeparator;
        out += visual_text;
        break;
    }
    return out;
}

DatasetSplit split_dataset(const std::vector<LabeledExample>& examples, std::uint64_t seed) {
    std::vector<LabeledExample> sorted = examples;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.record_id < b.record_id; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].record_id == sorted[i - 1].record_id) {
            throw Error(ErrorKind::InvalidRecord, "record '" + sorted[i].record_id + "' labeled more than once");
        }
    }

    std::vector<LabeledExample> relevant, irrelevant;
    for (auto& e : sorted) (e.label == Label::Relevant ? relevant : irrelevant).push_back(std::move(e));
    if (relevant.size() < 2 || irrelevant.size() < 2) {
        throw Error(ErrorKind::InsufficientClassData, "need >= 2 examples per class, have " +
                                                          std::to_string(relevant.size()) + " relevant / " +
                                                          std::to_string(irrelevant.size()) + " irrelevant");
    }

    Rng rng(seed);
    rng.shuffle(relevant);
    rng.shuffle(irrelevant);
    auto test_count = [](std::size_t n) {
        const auto t = static_cast<std::size_t>(std::llround(kTestFraction * static_cast<double>(n)));
        return std::clamp<std::size_t>(t, 1, n - 1);
    };
    const std::size_t test_rel = test_count(relevant.size());
    const std::size_t test_irr = test_count(irrelevant.size());
    const std::size_t balanced = std::min(test_rel, test_irr);

    DatasetSplit out;
    for (std::size_t i = 0; i < relevant.size(); ++i) {
        if (i >= test_rel) out.train.push_back(relevant[i]);
        else if (i < balanced) out.test.push_back(relevant[i]);
    }
    for (std::size_t i = 0; i < irrelevant.size(); ++i) {
        if (i >= test_irr) out.train.push_back(irrelevant[i]);
        else if (i < balanced) out.test.push_back(irrelevant[i]);
    }
    auto by_id = [](const auto& a, const auto& b) { return a.record_id < b.record_id; };
    std::sort(out.train.begin(), out.train.end(), by_id);
    std::sort(out.test.begin(), out.test.end(), by_id);
    return out;
}

nlohmann::json to_json(const LabeledExample& e) {
    return {{"record_id", e.record_id}, {"text", e.text}, {"label", to_string(e.label)},
            {"annotator", e.annotator}, {"session", e.session}};
}

LabeledExample labeled_example_from_json(const nlohmann::json& j) {
    try {
        LabeledExample e;
        e.record_id = j.at("record_id").get<std::string>();
        e.text = j.value("text", "");
        auto label = parse_label(j.at("label").get<std::string>());
        if (!label) throw Error(ErrorKind::MalformedManifest, "unknown label for '" + e.record_id + "'");
        e.label = *label;
        e.annotator = j.value("annotator", "");
        e.session = j.value("session", "");
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::MalformedManifest, std::string("labeled example: ") + ex.what());
    }
}

}  // namespace vidreq::relevance
