#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace vidreq {

std::string read_file(const std::filesystem::path& path);

// Writes through a temporary sibling and renames, so readers never observe a
// partially written artifact.
void write_file(const std::filesystem::path& path, const std::string& content);

nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& value);

// Canonical artifact rendering: two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& value);

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

}  // namespace vidreq
