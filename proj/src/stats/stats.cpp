#include "vidreq/stats/stats.hpp"

#include <cstdio>
#include <set>

#include "vidreq/core/error.hpp"
#include "vidreq/core/text.hpp"

namespace vidreq::stats {

namespace {

std::pair<std::size_t, std::size_t> word_counts(const std::vector<std::string>& tokens) {
    return {tokens.size(), std::set<std::string>(tokens.begin(), tokens.end()).size()};
}

struct Accumulator {
    std::size_t n = 0;
    double duration = 0, views = 0;
    double aw = 0, auw = 0, aws = 0, auws = 0;
    double vw = 0, vuw = 0, vws = 0, vuws = 0;

    void add(const VideoCounts& c) {
        ++n;
        duration += c.duration_s;
        views += c.views;
        aw += static_cast<double>(c.audio_words);
        auw += static_cast<double>(c.unique_audio_words);
        aws += static_cast<double>(c.audio_words) / c.duration_s;
        auws += static_cast<double>(c.unique_audio_words) / c.duration_s;
        vw += static_cast<double>(c.visual_words);
        vuw += static_cast<double>(c.unique_visual_words);
        vws += static_cast<double>(c.visual_words) / c.duration_s;
        vuws += static_cast<double>(c.unique_visual_words) / c.duration_s;
    }

    ContentStats finish(Platform p, std::optional<Category> cat) const {
        const double m = static_cast<double>(n);
        ContentStats s;
        s.platform = p;
        s.category = cat;
        s.videos = n;
        s.avg_duration_s = duration / m;
        s.avg_views = views / m;
        s.audio = {aw / m, auw / m, aws / m, auws / m};
        s.visual = {vw / m, vuw / m, vws / m, vuws / m};
        return s;
    }
};

}  // namespace

VideoCounts count_video(const VideoRecord& record, const TextBundle* bundle) {
    VideoCounts c;
    c.duration_s = record.duration_s;
    c.views = static_cast<double>(record.view_count);
    if (!bundle) return c;
    std::tie(c.audio_words, c.unique_audio_words) = word_counts(word_tokens(bundle->audio_text));
    std::vector<std::string> visual;
    for (const auto& l : bundle->visual_lines) {
        auto t = word_tokens(l.text);
        visual.insert(visual.end(), t.begin(), t.end());
    }
    std::tie(c.visual_words, c.unique_visual_words) = word_counts(visual);
    return c;
}

std::vector<ContentStats> content_statistics(const std::vector<VideoRecord>& records,
                                             const ingest::BundleIndex& bundles) {
    std::set<std::string> ids;
    for (const auto& r : records) ids.insert(r.id);
    for (const auto& [id, _] : bundles) {
        if (!ids.contains(id)) throw Error(ErrorKind::DanglingBundle, "bundle '" + id + "' has no record");
    }

    std::map<std::pair<Platform, Category>, Accumulator> groups;
    std::map<Platform, Accumulator> totals;
    for (const auto& r : records) {
        auto it = bundles.find(r.id);
        const auto c = count_video(r, it == bundles.end() ? nullptr : &it->second);
        groups[{r.platform, r.category}].add(c);
        totals[r.platform].add(c);
    }
    std::vector<ContentStats> out;
    for (const auto& [p, total] : totals) {
        for (const auto& [key, acc] : groups) {
            if (key.first == p) out.push_back(acc.finish(p, key.second));
        }
        out.push_back(total.finish(p, std::nullopt));
    }
    return out;
}

namespace {

nlohmann::json text_json(const TextStats& t) {
    return {{"words_per_video", t.words_per_video},
            {"unique_words_per_video", t.unique_words_per_video},
            {"words_per_s", t.words_per_s},
            {"unique_words_per_s", t.unique_words_per_s}};
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

nlohmann::json to_json(const std::vector<ContentStats>& rows) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& s : rows) {
        groups.push_back({
            {"platform", to_string(s.platform)},
            {"category", s.category ? std::string(to_string(*s.category)) : std::string("Total")},
            {"videos", s.videos},
            {"avg_duration_s", s.avg_duration_s},
            {"avg_views", s.avg_views},
            {"audio", text_json(s.audio)},
            {"visual", text_json(s.visual)},
        });
    }
    return {{"aggregation", "mean of per-video values"}, {"groups", groups}};
}

std::string to_markdown(const std::vector<ContentStats>& rows) {
    std::string out =
        "| Platform | Category | Videos | Avg. duration (s) | Avg. views | Audio words/video | Unique audio "
        "words/video | Audio words/s | Unique audio words/s | Visual words/video | Unique visual words/video | "
        "Visual words/s | Unique visual words/s |\n"
        "|---|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
    for (const auto& s : rows) {
        out += "| " + std::string(to_string(s.platform)) + " | " +
               (s.category ? std::string(to_string(*s.category)) : std::string("**Total**")) + " | " +
               std::to_string(s.videos) + " | " + fmt(s.avg_duration_s) + " | " + fmt(s.avg_views) + " | " +
               fmt(s.audio.words_per_video) + " | " + fmt(s.audio.unique_words_per_video) + " | " +
               fmt(s.audio.words_per_s) + " | " + fmt(s.audio.unique_words_per_s) + " | " +
               fmt(s.visual.words_per_video) + " | " + fmt(s.visual.unique_words_per_video) + " | " +
               fmt(s.visual.words_per_s) + " | " + fmt(s.visual.unique_words_per_s) + " |\n";
    }
    out += "\nPer-second columns average each video's own rate.\n";
    return out;
}

namespace {

SplitSection empty_section() {
    SplitSection s;
    s.per_platform[Platform::TikTok] = {};
    s.per_platform[Platform::YouTube] = {};
    return s;
}

void count(SplitSection& s, const RelevanceRow& r) {
    auto& c = s.per_platform[r.platform];
    if (r.label == Label::Relevant) {
        ++c.relevant;
        ++s.total.relevant;
    } else {
        ++c.irrelevant;
        ++s.total.irrelevant;
    }
}

nlohmann::json section_json(const SplitSection& s) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [p, c] : s.per_platform) {
        j[std::string(to_string(p))] = {{"relevant", c.relevant}, {"irrelevant", c.irrelevant}, {"total", c.total()}};
    }
    j["Total"] = {{"relevant", s.total.relevant}, {"irrelevant", s.total.irrelevant}, {"total", s.total.total()}};
    return j;
}

void section_md(std::string& out, const std::string& title, const SplitSection& s) {
    out += "| " + title + " | Relevant | Irrelevant | Total |\n|---|---:|---:|---:|\n";
    for (const auto& [p, c] : s.per_platform) {
        out += "| " + std::string(to_string(p)) + " | " + std::to_string(c.relevant) + " | " +
               std::to_string(c.irrelevant) + " | " + std::to_string(c.total()) + " |\n";
    }
    out += "| Total | " + std::to_string(s.total.relevant) + " | " + std::to_string(s.total.irrelevant) + " | " +
           std::to_string(s.total.total()) + " |\n\n";
}

}  // namespace

RelevanceSplitReport relevance_split_report(const std::vector<RelevanceRow>& rows) {
    RelevanceSplitReport r{empty_section(), empty_section(), empty_section()};
    for (const auto& row : rows) {
        count(row.provenance == Provenance::Manual ? r.manual : r.model, row);
        count(r.combined, row);
    }
    return r;
}

nlohmann::json to_json(const RelevanceSplitReport& r) {
    return {{"manual", section_json(r.manual)}, {"model", section_json(r.model)}, {"combined", section_json(r.combined)}};
}

std::string to_markdown(const RelevanceSplitReport& r) {
    std::string out;
    section_md(out, "Labelled", r.manual);
    section_md(out, "Classified", r.model);
    section_md(out, "Combined", r.combined);
    return out;
}

}  // namespace vidreq::stats
