#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vidreq/core/model.hpp"
#include "vidreq/ingest/language.hpp"

namespace vidreq::ingest {

struct FilterReport {
    std::size_t input_count = 0;
    std::vector<std::string> dropped_official;
    std::vector<std::pair<std::string, std::string>> dropped_language;  // (id, detected tag)
    std::vector<std::string> retained;

    bool operator==(const FilterReport&) const = default;
};

struct OfficialSplit {
    std::vector<VideoRecord> kept;
    std::vector<VideoRecord> dropped;
};

OfficialSplit filter_official(const std::vector<VideoRecord>& records);

using BundleIndex = std::map<std::string, TextBundle>;

// Official-account filter, then language filter; only "en" is retained.
// A bundle's audio_language, when present, decides the record's language.
FilterReport apply_filters(const CorpusManifest& manifest, const BundleIndex& bundles,
                           const LanguageDetector& detector);
FilterReport apply_filters(const CorpusManifest& manifest, const BundleIndex& bundles);

nlohmann::json to_json(const FilterReport& report);
FilterReport filter_report_from_json(const nlohmann::json& j);

}  // namespace vidreq::ingest
