#include "vidreq/core/io.hpp"

#include <fstream>
#include <sstream>

#include "vidreq/core/error.hpp"

namespace vidreq {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MissingInput, path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
        out << content;
        if (!out) throw Error(ErrorKind::Io, "short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

nlohmann::json read_json(const fs::path& path) {
    std::string text = read_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::MalformedManifest, path.string() + ": " + e.what());
    }
}

std::string dump_json(const nlohmann::json& value) { return value.dump(2) + "\n"; }

void write_json(const fs::path& path, const nlohmann::json& value) { write_file(path, dump_json(value)); }

std::vector<nlohmann::json> read_jsonl(const fs::path& path) {
    std::vector<nlohmann::json> out;
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MissingInput, path.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(nlohmann::json::parse(line));
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorKind::MalformedManifest, path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace vidreq
