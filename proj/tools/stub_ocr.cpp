// Deterministic OCR adapter for tests and the bundled fixture.
//
// Usage: vidreq-stub-ocr <frame.pgm>
// Looks the frame's file name up in ocr.json next to it:
//   {"000010.pgm": [{"x": 4, "y": 8, "w": 40, "h": 6, "text": "..."}]}
// and prints {"regions": [...]}; frames without an entry have no text.
// VIDREQ_STUB_FAIL=1 makes the adapter exit with status 3.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: vidreq-stub-ocr <frame>\n";
        return 64;
    }
    if (const char* fail = std::getenv("VIDREQ_STUB_FAIL"); fail && std::string(fail) == "1") return 3;
    const std::filesystem::path frame = argv[1];
    nlohmann::json out = {{"regions", nlohmann::json::array()}};
    std::ifstream in(frame.parent_path() / "ocr.json");
    if (in) {
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            const auto table = nlohmann::json::parse(buf.str());
            if (auto it = table.find(frame.filename().string()); it != table.end()) out["regions"] = *it;
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "ocr.json: " << e.what() << "\n";
            return 65;
        }
    }
    std::cout << out.dump() << "\n";
    return 0;
}
