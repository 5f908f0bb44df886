// Writes the bundled 12-record fixture corpus:
//   corpus.json, media/<id>.json (stub ASR descriptors),
//   frames/<id>/{NNNNNN.pgm, meta.json, ocr.json}, labels.log.jsonl.
//
// Usage: vidreq-fixture <out_dir>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "vidreq/core/io.hpp"
#include "vidreq/core/manifest.hpp"
#include "vidreq/frames/image.hpp"
#include "vidreq/frames/synthetic.hpp"

namespace fs = std::filesystem;
using namespace vidreq;

namespace {

struct Segment {
    double start;
    double end;
    const char* text;
};

struct Spec {
    const char* id;
    Platform platform;
    const char* product;
    Category category;
    const char* title;
    const char* description;
    const char* creator;
    bool official;
    double duration_s;
    std::int64_t views;
    const char* audio_language;  // nullptr: no audio track
    std::vector<Segment> segments;
    double fps;
    std::vector<const char*> scene_text;  // OCR line per scene (3 scenes)
};

constexpr int kFrameWidth = 64;
constexpr int kFrameHeight = 48;
constexpr int kFrames = 60;

std::vector<Spec> specs() {
    const auto tt = Platform::TikTok;
    const auto yt = Platform::YouTube;
    const auto sw = Category::Software;
    const auto ph = Category::Phone;
    return {
        {"r01", tt, "Firefox", sw, "Firefox tabs keep crashing", "honest review of the new update and the bugs I found",
         "@tabhoarder", false, 24, 15200, "en",
         {{0.5, 6.0, "the browser crashes every time I open more than twenty tabs"},
          {6.5, 12.0, "and the latest update did not fix the crash at all"}},
         10, {"CRASH AFTR UPDAT", "twenty tabs", "pls fix"}},
        {"r02", tt, "Firefox", sw, "Firefox battery drain test", "is this browser killing my laptop battery",
         "@benchbuddy", false, 31, 8800, "en",
         {{0.0, 7.5, "battery drain on my laptop is much worse with this browser"},
          {8.0, 15.0, "the other browser lasted two more hours on the same battery test"}},
         10, {"BATERY DRAIN", "two more hours", "battery test"}},
        {"r03", tt, "Firefox", sw, "Why I switched to Firefox", "privacy first and I love the tracking protection",
         "@privacyfan", false, 18, 40210, "en",
         {{0.0, 5.0, "I really love the privacy features of this browser"},
          {5.5, 11.0, "the tracking protection is the best feature and it blocks every tracker"}},
         10, {"privacy features", "tracking protection", "best feature"}},
        {"r04", tt, "Firefox", sw, "Firefox dance challenge", "dance with me and tag your friends", "@dancequeen",
         false, 15, 120400, "en",
         {{0.0, 4.0, "dance with me everybody this song is so much fun"},
          {4.5, 9.0, "tag your friends and do the challenge with me"}},
         10, {"dance challenge", "so much fun", "tag a friend"}},
        {"r05", tt, "Firefox", sw, "my cat and firefox", "she loves sitting on the keyboard when I browse",
         "@catmom", false, 12, 5600, nullptr, {}, 10,
         {"my cat is sleeping on the keyboard again", "she is so cute", "good night"}},
        {"r06", yt, "Pixel", Category::Phone, "Pixel camera review", "night photos and battery life after one week",
         "TechWithSam", false, 540, 98000, "en",
         {{3.0, 60.0, "the camera takes amazing night photos with a lot of detail"},
          {61.0, 140.0, "but the battery life is disappointing and it barely lasts a day"}},
         2, {"NIGHT SIGHT", "battery life", "one week later"}},
        {"r07", yt, "Pixel", ph, "Pixel 8 battery problems", "the update made my phone hot and the battery drains fast",
         "PhoneFixes", false, 420, 51000, "en",
         {{0.0, 45.0, "after the update the battery drains fast and the phone gets hot"},
          {46.0, 120.0, "I had to turn off the always on display to make it last until evening"}},
         2, {"battery drains fast", "phone gets hot", "always on display"}},
        {"r08", yt, "Pixel", ph, "Pixel vs iPhone comparison", "screen camera and battery compared side by side",
         "VersusLab", false, 780, 230000, "en",
         {{0.0, 80.0, "compared to the other phone the pixel screen is brighter outdoors"},
          {81.0, 200.0, "the camera is better in low light but the speakers are weaker"}},
         2, {"SCREEN COMPARISON", "low light camera", "speakers"}},
        {"r09", yt, "Pixel", ph, "beach day vlog", "a day at the beach with friends shot on my phone",
         "SunnyVlogs", false, 660, 7300, "en",
         {{0.0, 90.0, "hey guys welcome back to my vlog today we are going to the beach"},
          {91.0, 200.0, "we had ice cream and swam until the sun went down"}},
         2, {"VLOG", "beach day", "subscribe"}},
        {"r10", yt, "Pixel", ph, "Pixel long term review", "six months with the phone: what broke and what got better",
         "LongTermTech", false, 2400, 145000, "en",
         {{0.0, 290.0, "the fingerprint sensor fails often when my hands are wet"},
          {300.0, 590.0, "software updates arrive every month and they fixed the camera lag"},
          {600.0, 890.0, "the battery still lasts a full day after six months"},
          {900.0, 1190.0, "the screen has a green tint at low brightness"},
          {1200.0, 1490.0, "call quality is great and the speaker is loud"},
          {1500.0, 1790.0, "I wish the charging was faster because it takes two hours"},
          {1800.0, 2090.0, "overall I would buy it again for the camera"},
          {2100.0, 2390.0, "thanks for watching and see you in the next review"}},
         0.025, {"FINGERPRINT SENSOR", "green tint", "charging speed"}},
        {"r11", tt, "Firefox", sw, "Firefox Test", "das ist ein sehr gutes Programm und ich bin mit dem Browser zufrieden",
         "@berlinbrowser", false, 20, 3100, "de",
         {{0.0, 6.0, "das ist der beste Browser den ich kenne"}, {6.5, 12.0, "und die Erweiterungen sind sehr gut"}},
         10, {"Erweiterungen", "sehr gut", "danke"}},
        {"r12", yt, "Pixel", ph, "Meet the new Pixel", "the official introduction of the newest phone", "Made by Google",
         true, 120, 2500000, "en",
         {{0.0, 30.0, "meet the new phone with the most advanced camera we have ever made"}},
         2, {"Meet Pixel", "new camera", "order now"}},
    };
}

void write_frames(const fs::path& dir, const Spec& s, std::uint64_t seed) {
    fs::create_directories(dir);
    frames::SceneSpec scene;
    scene.width = kFrameWidth;
    scene.height = kFrameHeight;
    scene.frame_count = kFrames;
    scene.cuts = {kFrames / 3, 2 * kFrames / 3};
    scene.seed = seed;
    const auto stream = frames::scene_stream(scene);
    nlohmann::json ocr = nlohmann::json::object();
    for (int i = 0; i < kFrames; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "%06d.pgm", i);
        frames::write_pgm(dir / name, stream[i]);
        const int scene_index = i < scene.cuts[0] ? 0 : (i < scene.cuts[1] ? 1 : 2);
        // A caption tall enough for either OCR mode and a small watermark
        // that only full-frame OCR keeps.
        ocr[name] = nlohmann::json::array({
            {{"x", 2}, {"y", 4}, {"w", 56}, {"h", 8}, {"text", s.scene_text[scene_index]}},
            {{"x", 40}, {"y", 44}, {"w", 22}, {"h", 2}, {"text", s.creator}},
        });
    }
    write_json(dir / "ocr.json", ocr);
    write_json(dir / "meta.json", {{"fps", s.fps}, {"platform", to_string(s.platform)}});
}

std::string label_event(const char* session, const char* record, const char* annotator, const char* label) {
    return nlohmann::json{{"event", "label"},
                          {"session_id", session},
                          {"record_id", record},
                          {"annotator", annotator},
                          {"label", label}}
               .dump();
}

std::string labels_log() {
    std::string out;
    auto line = [&out](const std::string& s) { out += s + "\n"; };
    const std::vector<std::string> pair_records = {"r01", "r02", "r03", "r04", "r05",
                                                   "r06", "r07", "r08", "r09", "r10"};
    line(nlohmann::json{{"event", "session_created"},
                        {"session_id", "S1"},
                        {"mode", "pair"},
                        {"annotators", {"alice", "bob"}},
                        {"record_ids", pair_records},
                        {"created_at", "2024-01-15T10:00:00Z"}}
             .dump());
    // Rater agreement matrix [[4, 1], [2, 3]] (relevant first): kappa 0.4.
    const char* alice[] = {"relevant", "relevant", "irrelevant", "irrelevant", "irrelevant",
                           "relevant", "relevant", "relevant",   "irrelevant", "irrelevant"};
    const char* bob[] = {"relevant", "relevant", "relevant",   "irrelevant", "irrelevant",
                         "relevant", "relevant", "irrelevant", "irrelevant", "relevant"};
    for (std::size_t i = 0; i < pair_records.size(); ++i) {
        line(label_event("S1", pair_records[i].c_str(), "alice", alice[i]));
        line(label_event("S1", pair_records[i].c_str(), "bob", bob[i]));
    }
    for (const char* r : {"r03", "r08", "r10"}) {
        line(nlohmann::json{{"event", "resolution"}, {"session_id", "S1"}, {"record_id", r}, {"label", "relevant"}}
                 .dump());
    }
    line(nlohmann::json{{"event", "session_created"},
                        {"session_id", "S2"},
                        {"mode", "solo"},
                        {"annotators", {"carol"}},
                        {"record_ids", {"r11", "r12"}},
                        {"created_at", "2024-01-16T09:30:00Z"}}
             .dump());
    line(label_event("S2", "r11", "carol", "irrelevant"));
    line(label_event("S2", "r12", "carol", "irrelevant"));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: vidreq-fixture <out_dir>\n";
        return 64;
    }
    const fs::path root = argv[1];
    try {
        CorpusManifest manifest;
        manifest.search_terms = {{"Firefox", "firefox browser review"}, {"Pixel", "google pixel review"}};
        std::uint64_t seed = 1000;
        for (const auto& s : specs()) {
            VideoRecord r;
            r.id = s.id;
            r.platform = s.platform;
            r.product = s.product;
            r.category = s.category;
            r.title = s.title;
            r.description = s.description;
            r.creator_handle = s.creator;
            r.is_official_account = s.official;
            r.duration_s = s.duration_s;
            r.view_count = s.views;
            r.media_path = "media/" + std::string(s.id) + ".json";
            manifest.records.push_back(r);

            nlohmann::json audio = nullptr;
            if (s.audio_language) {
                nlohmann::json segs = nlohmann::json::array();
                for (const auto& seg : s.segments) segs.push_back({{"start", seg.start}, {"end", seg.end}, {"text", seg.text}});
                audio = {{"language", s.audio_language}, {"segments", segs}};
            }
            write_json(root / *r.media_path, {{"duration_s", s.duration_s}, {"audio", audio}});
            write_frames(root / "frames" / s.id, s, seed++);
        }
        write_file(root / "corpus.json", serialize_manifest(manifest));
        write_file(root / "labels.log.jsonl", labels_log());
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
