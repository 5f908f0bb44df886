#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vidreq/core/model.hpp"
#include "vidreq/ingest/filter.hpp"

namespace vidreq::stats {

struct TextStats {
    double words_per_video = 0.0;
    double unique_words_per_video = 0.0;
    double words_per_s = 0.0;
    double unique_words_per_s = 0.0;

    bool operator==(const TextStats&) const = default;
};

struct ContentStats {
    Platform platform = Platform::TikTok;
    std::optional<Category> category;  // unset for the platform total
    std::size_t videos = 0;
    double avg_duration_s = 0.0;
    double avg_views = 0.0;
    TextStats audio;
    TextStats visual;
};

// Per-video figures; per-second values divide by that video's duration.
struct VideoCounts {
    double duration_s = 0.0;
    double views = 0.0;
    std::size_t audio_words = 0;
    std::size_t unique_audio_words = 0;
    std::size_t visual_words = 0;
    std::size_t unique_visual_words = 0;
};

VideoCounts count_video(const VideoRecord& record, const TextBundle* bundle);

// One row per (platform, category) present, followed by each platform's
// total. Every figure is the mean over the group's videos of the per-video
// value, per-second figures included. Records without a bundle count as
// having no text. Throws DanglingBundle when a bundle names no given record.
std::vector<ContentStats> content_statistics(const std::vector<VideoRecord>& records,
                                             const ingest::BundleIndex& bundles);

nlohmann::json to_json(const std::vector<ContentStats>& rows);
std::string to_markdown(const std::vector<ContentStats>& rows);

enum class Provenance { Manual, Model };

struct RelevanceRow {
    std::string record_id;
    Platform platform = Platform::TikTok;
    Label label = Label::Relevant;
    Provenance provenance = Provenance::Manual;
};

struct SplitCounts {
    std::size_t relevant = 0;
    std::size_t irrelevant = 0;
    std::size_t total() const { return relevant + irrelevant; }

    bool operator==(const SplitCounts&) const = default;
};

struct SplitSection {
    std::map<Platform, SplitCounts> per_platform;  // both platforms always present
    SplitCounts total;
};

struct RelevanceSplitReport {
    SplitSection manual;
    SplitSection model;
    SplitSection combined;
};

RelevanceSplitReport relevance_split_report(const std::vector<RelevanceRow>& rows);

nlohmann::json to_json(const RelevanceSplitReport& r);
std::string to_markdown(const RelevanceSplitReport& r);

}  // namespace vidreq::stats
