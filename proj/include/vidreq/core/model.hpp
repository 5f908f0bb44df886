#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace vidreq {

enum class Platform { TikTok, YouTube };
enum class Category { Software, Phone, Computer, Automotive };
enum class Label { Relevant, Irrelevant };

std::string_view to_string(Platform p);
std::string_view to_string(Category c);
std::string_view to_string(Label l);
std::optional<Platform> parse_platform(std::string_view s);
std::optional<Category> parse_category(std::string_view s);
std::optional<Label> parse_label(std::string_view s);

struct VideoRecord {
    std::string id;
    Platform platform = Platform::TikTok;
    std::string product;
    Category category = Category::Software;
    std::string title;
    std::string description;
    std::string creator_handle;
    bool is_official_account = false;
    double duration_s = 0.0;
    std::int64_t view_count = 0;
    std::optional<std::string> media_path;
    std::string language = "und";
    // Fields the manifest carried that this version does not interpret.
    nlohmann::json extra = nlohmann::json::object();

    bool operator==(const VideoRecord&) const = default;
};

struct CorpusManifest {
    int schema_version = 1;
    std::vector<VideoRecord> records;
    std::map<std::string, std::string> search_terms;
    nlohmann::json extra = nlohmann::json::object();

    const VideoRecord* find(std::string_view id) const;

    bool operator==(const CorpusManifest&) const = default;
};

struct AudioSegment {
    double start_s = 0.0;
    double end_s = 0.0;
    std::string text;

    bool operator==(const AudioSegment&) const = default;
};

struct VisualLine {
    double frame_ts_s = 0.0;
    std::string text;

    bool operator==(const VisualLine&) const = default;
};

struct TextBundle {
    std::string record_id;
    std::string audio_text;
    std::vector<AudioSegment> audio_segments;
    std::vector<VisualLine> visual_lines;
    bool has_audio_text = false;
    // Language reported by the speech backend; consulted by the language filter.
    std::optional<std::string> audio_language;
    std::string assembled_at;

    bool operator==(const TextBundle&) const = default;
};

// Invariant check; returns one message per violated rule.
std::vector<std::string> validate_bundle(const TextBundle& b, double duration_s);

nlohmann::json to_json(const TextBundle& b);
TextBundle bundle_from_json(const nlohmann::json& j);

}  // namespace vidreq
