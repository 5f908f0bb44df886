#include <doctest.h>

#include "vidreq/core/error.hpp"
#include "vidreq/core/rng.hpp"
#include "vidreq/stats/stats.hpp"

using namespace vidreq;
using namespace vidreq::stats;

namespace {

VideoRecord rec(const std::string& id, Platform p, Category c, double dur, std::int64_t views) {
    VideoRecord r;
    r.id = id;
    r.platform = p;
    r.category = c;
    r.duration_s = dur;
    r.view_count = views;
    return r;
}

TextBundle bundle(const std::string& id, const std::string& audio, std::vector<std::string> visual) {
    TextBundle b;
    b.record_id = id;
    b.audio_text = audio;
    b.has_audio_text = !audio.empty();
    for (std::size_t i = 0; i < visual.size(); ++i) b.visual_lines.push_back({double(i), visual[i]});
    return b;
}

const ContentStats& row(const std::vector<ContentStats>& rows, Platform p, std::optional<Category> c) {
    for (auto& r : rows)
        if (r.platform == p && r.category == c) return r;
    FAIL("row missing");
    return rows.front();
}

}  // namespace

TEST_CASE("per-video counts") {
    const auto r = rec("a", Platform::TikTok, Category::Software, 10, 100);
    const auto b = bundle("a", "the app the app crashes", {"CRASH", "crash again"});
    const auto c = count_video(r, &b);
    CHECK(c.audio_words == 5);
    CHECK(c.unique_audio_words == 3);
    CHECK(c.visual_words == 3);
    CHECK(c.unique_visual_words == 2);
    CHECK(count_video(r, nullptr).audio_words == 0);
}

TEST_CASE("statistics arithmetic") {
    const std::vector<VideoRecord> rs{rec("a", Platform::TikTok, Category::Software, 10, 100),
                                      rec("b", Platform::TikTok, Category::Software, 20, 300),
                                      rec("c", Platform::TikTok, Category::Phone, 40, 50),
                                      rec("d", Platform::YouTube, Category::Phone, 100, 7)};
    ingest::BundleIndex bs;
    bs["a"] = bundle("a", "one two three four", {"x"});
    bs["b"] = bundle("b", "one one", {});
    bs["c"] = bundle("c", "", {"alpha beta"});
    const auto rows = content_statistics(rs, bs);
    REQUIRE(rows.size() == 5);  // TikTok: Software, Phone, total; YouTube: Phone, total
    CHECK(rows.back().platform == Platform::YouTube);
    CHECK_FALSE(rows.back().category);

    const auto& sw = row(rows, Platform::TikTok, Category::Software);
    CHECK(sw.videos == 2);
    CHECK(sw.avg_duration_s == 15.0);
    CHECK(sw.avg_views == 200.0);
    CHECK(sw.audio.words_per_video == 3.0);
    CHECK(sw.audio.unique_words_per_video == 2.5);
    CHECK(sw.audio.words_per_s == doctest::Approx((4 / 10.0 + 2 / 20.0) / 2));
    CHECK(sw.audio.unique_words_per_s == doctest::Approx((4 / 10.0 + 1 / 20.0) / 2));
    CHECK(sw.visual.words_per_video == 0.5);

    const auto& tt = row(rows, Platform::TikTok, std::nullopt);
    CHECK(tt.videos == 3);
    CHECK(tt.avg_duration_s == doctest::Approx(70 / 3.0));
    CHECK(tt.visual.words_per_video == doctest::Approx(1.0));

    const auto& yt = row(rows, Platform::YouTube, std::nullopt);
    CHECK(yt.audio.words_per_video == 0.0);
    CHECK(to_json(rows).is_object());
    CHECK(to_markdown(rows).find("TikTok") != std::string::npos);
}

TEST_CASE("statistics are additive and order independent") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<VideoRecord> rs;
        ingest::BundleIndex bs;
        const int n = 1 + int(rng.below(15));
        for (int i = 0; i < n; ++i) {
            const auto id = "r" + std::to_string(i);
            rs.push_back(rec(id, rng.below(2) ? Platform::TikTok : Platform::YouTube,
                             static_cast<Category>(rng.below(4)), 1 + rng.below(600), std::int64_t(rng.below(100000))));
            if (rng.below(4)) {
                std::string audio;
                for (std::size_t k = rng.below(30); k > 0; --k) audio += " w" + std::to_string(rng.below(20));
                bs[id] = bundle(id, audio, {"line " + std::to_string(rng.below(5))});
            }
        }
        const auto rows = content_statistics(rs, bs);
        for (const auto& total : rows) {
            if (total.category) continue;
            std::size_t videos = 0;
            double dur = 0, wps = 0, vis = 0;
            for (const auto& r : rows) {
                if (!r.category || r.platform != total.platform) continue;
                videos += r.videos;
                dur += r.avg_duration_s * r.videos;
                wps += r.audio.words_per_s * r.videos;
                vis += r.visual.unique_words_per_video * r.videos;
            }
            CHECK(videos == total.videos);
            CHECK(dur / videos == doctest::Approx(total.avg_duration_s));
            CHECK(wps / videos == doctest::Approx(total.audio.words_per_s));
            CHECK(vis / videos == doctest::Approx(total.visual.unique_words_per_video));
        }
        auto shuffled = rs;
        rng.shuffle(shuffled);
        const auto again = content_statistics(shuffled, bs);
        REQUIRE(again.size() == rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(again[i].videos == rows[i].videos);
            CHECK(again[i].avg_views == doctest::Approx(rows[i].avg_views));
            CHECK(again[i].audio.words_per_video == doctest::Approx(rows[i].audio.words_per_video));
        }
    }
}

TEST_CASE("dangling bundle") {
    ingest::BundleIndex bs;
    bs["ghost"] = bundle("ghost", "x", {});
    try {
        content_statistics({rec("a", Platform::TikTok, Category::Phone, 1, 1)}, bs);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DanglingBundle);
    }
    CHECK(content_statistics({}, {}).empty());
}

TEST_CASE("relevance split report") {
    const std::vector<RelevanceRow> rows{{"a", Platform::TikTok, Label::Relevant, Provenance::Manual},
                                         {"b", Platform::TikTok, Label::Irrelevant, Provenance::Model},
                                         {"c", Platform::YouTube, Label::Relevant, Provenance::Model},
                                         {"d", Platform::YouTube, Label::Relevant, Provenance::Model}};
    const auto r = relevance_split_report(rows);
    CHECK(r.manual.total == SplitCounts{1, 0});
    CHECK(r.model.total == SplitCounts{2, 1});
    CHECK(r.combined.total == SplitCounts{3, 1});
    CHECK(r.manual.per_platform.at(Platform::YouTube) == SplitCounts{0, 0});
    CHECK(r.combined.per_platform.at(Platform::YouTube).total() == 2);
    CHECK(to_markdown(r).find("Combined") != std::string::npos);
}
