// Deterministic speech adapter for tests and the bundled fixture.
//
// Usage: vidreq-stub-asr <media.json> <max_seconds>
// The media file is a JSON descriptor:
//   {"duration_s": 95, "audio": {"language": "en", "segments": [{"start","end","text"}]}}
// with "audio": null for a video without an audio track. Segments starting at
// or after max_seconds are omitted and the last one is cut at max_seconds.
// VIDREQ_STUB_FAIL=1 makes the adapter exit with status 3.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: vidreq-stub-asr <media> <max_seconds>\n";
        return 64;
    }
    if (const char* fail = std::getenv("VIDREQ_STUB_FAIL"); fail && std::string(fail) == "1") return 3;
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot read " << argv[1] << "\n";
        return 66;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const double max_seconds = std::strtod(argv[2], nullptr);
    nlohmann::json out = {{"language", nullptr}, {"segments", nlohmann::json::array()}};
    try {
        const auto media = nlohmann::json::parse(buf.str());
        const auto& audio = media.at("audio");
        if (!audio.is_null()) {
            out["language"] = audio.value("language", nlohmann::json());
            for (const auto& s : audio.at("segments")) {
                const double start = s.at("start").get<double>();
                if (start >= max_seconds) continue;
                out["segments"].push_back({{"start", start},
                                           {"end", std::min(s.at("end").get<double>(), max_seconds)},
                                           {"text", s.at("text")}});
            }
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << argv[1] << ": " << e.what() << "\n";
        return 65;
    }
    std::cout << out.dump() << "\n";
    return 0;
}
