#include "vidreq/ingest/filter.hpp"

#include "vidreq/core/error.hpp"

namespace vidreq::ingest {

OfficialSplit filter_official(const std::vector<VideoRecord>& records) {
    OfficialSplit out;
    for (const auto& r : records) {
        (r.is_official_account ? out.dropped : out.kept).push_back(r);
    }
    return out;
}

FilterReport apply_filters(const CorpusManifest& manifest, const BundleIndex& bundles,
                           const LanguageDetector& detector) {
    FilterReport report;
    report.input_count = manifest.records.size();
    auto split = filter_official(manifest.records);
    for (const auto& r : split.dropped) report.dropped_official.push_back(r.id);

    for (const auto& r : split.kept) {
        std::optional<std::string> transcript_language;
        if (auto it = bundles.find(r.id); it != bundles.end() && it->second.has_audio_text) {
            transcript_language = it->second.audio_language;
        }
        std::string lang = detect_language(r.description, transcript_language, detector);
        if (lang == "en") {
            report.retained.push_back(r.id);
        } else {
            report.dropped_language.emplace_back(r.id, std::move(lang));
        }
    }
    return report;
}

FilterReport apply_filters(const CorpusManifest& manifest, const BundleIndex& bundles) {
    static const StopwordDetector heuristic;
    return apply_filters(manifest, bundles, heuristic);
}

nlohmann::json to_json(const FilterReport& report) {
    nlohmann::json dropped_language = nlohmann::json::array();
    for (const auto& [id, lang] : report.dropped_language) {
        dropped_language.push_back({{"id", id}, {"detected_language", lang}});
    }
    return {
        {"input_count", report.input_count},
        {"dropped_official", report.dropped_official},
        {"dropped_language", std::move(dropped_language)},
        {"retained", report.retained},
    };
}

FilterReport filter_report_from_json(const nlohmann::json& j) {
    try {
        FilterReport r;
        r.input_count = j.at("input_count").get<std::size_t>();
        r.dropped_official = j.at("dropped_official").get<std::vector<std::string>>();
        for (const auto& d : j.at("dropped_language")) {
            r.dropped_language.emplace_back(d.at("id").get<std::string>(), d.at("detected_language").get<std::string>());
        }
        r.retained = j.at("retained").get<std::vector<std::string>>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedManifest, std::string("filter_report: ") + e.what());
    }
}

}  // namespace vidreq::ingest
