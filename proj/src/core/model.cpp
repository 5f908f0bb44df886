#include "vidreq/core/model.hpp"

#include "vidreq/core/error.hpp"

namespace vidreq {

std::string_view to_string(Platform p) {
    return p == Platform::TikTok ? "TikTok" : "YouTube";
}

std::string_view to_string(Category c) {
    switch (c) {
    case Category::Software: return "Software";
    case Category::Phone: return "Phone";
    case Category::Computer: return "Computer";
    case Category::Automotive: return "Automotive";
    }
    return "Software";
}

std::string_view to_string(Label l) {
    return l == Label::Relevant ? "relevant" : "irrelevant";
}

std::optional<Platform> parse_platform(std::string_view s) {
    if (s == "TikTok") return Platform::TikTok;
    if (s == "YouTube") return Platform::YouTube;
    return std::nullopt;
}

std::optional<Category> parse_category(std::string_view s) {
    if (s == "Software") return Category::Software;
    if (s == "Phone") return Category::Phone;
    if (s == "Computer") return Category::Computer;
    if (s == "Automotive") return Category::Automotive;
    return std::nullopt;
}

std::optional<Label> parse_label(std::string_view s) {
    if (s == "relevant" || s == "Relevant") return Label::Relevant;
    if (s == "irrelevant" || s == "Irrelevant") return Label::Irrelevant;
    return std::nullopt;
}

const VideoRecord* CorpusManifest::find(std::string_view id) const {
    for (const auto& r : records) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

std::vector<std::string> validate_bundle(const TextBundle& b, double duration_s) {
    std::vector<std::string> out;
    if (b.has_audio_text == b.audio_text.empty()) {
        out.emplace_back("has_audio_text must equal (audio_text non-empty)");
    }
    for (std::size_t i = 0; i < b.audio_segments.size(); ++i) {
        const auto& s = b.audio_segments[i];
        if (!(s.start_s <= s.end_s)) out.emplace_back("segment " + std::to_string(i) + " has start > end");
        if (i > 0 && b.audio_segments[i - 1].end_s > s.start_s) {
            out.emplace_back("segment " + std::to_string(i) + " overlaps or is out of order");
        }
    }
    for (std::size_t i = 0; i < b.visual_lines.size(); ++i) {
        if (b.visual_lines[i].frame_ts_s > duration_s + 1e-9) {
            out.emplace_back("visual line " + std::to_string(i) + " is past the record duration");
        }
    }
    return out;
}

nlohmann::json to_json(const TextBundle& b) {
    nlohmann::json segs = nlohmann::json::array();
    for (const auto& s : b.audio_segments) {
        segs.push_back({{"start_s", s.start_s}, {"end_s", s.end_s}, {"text", s.text}});
    }
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& l : b.visual_lines) {
        lines.push_back({{"frame_ts_s", l.frame_ts_s}, {"text", l.text}});
    }
    return {
        {"record_id", b.record_id},
        {"audio_text", b.audio_text},
        {"audio_segments", std::move(segs)},
        {"visual_lines", std::move(lines)},
        {"has_audio_text", b.has_audio_text},
        {"audio_language", b.audio_language ? nlohmann::json(*b.audio_language) : nlohmann::json()},
        {"assembled_at", b.assembled_at},
    };
}

TextBundle bundle_from_json(const nlohmann::json& j) {
    try {
        TextBundle b;
        b.record_id = j.at("record_id").get<std::string>();
        b.audio_text = j.value("audio_text", "");
        for (const auto& s : j.value("audio_segments", nlohmann::json::array())) {
            b.audio_segments.push_back(
                {s.at("start_s").get<double>(), s.at("end_s").get<double>(), s.at("text").get<std::string>()});
        }
        for (const auto& l : j.value("visual_lines", nlohmann::json::array())) {
            b.visual_lines.push_back({l.at("frame_ts_s").get<double>(), l.at("text").get<std::string>()});
        }
        b.has_audio_text = j.value("has_audio_text", !b.audio_text.empty());
        if (auto it = j.find("audio_language"); it != j.end() && it->is_string()) {
            b.audio_language = it->get<std::string>();
        }
        b.assembled_at = j.value("assembled_at", "");
        return b;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedManifest, std::string("bundle: ") + e.what());
    }
}

}  // namespace vidreq
