#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vidreq/core/model.hpp"

namespace vidreq {

inline constexpr int kManifestSchemaVersion = 1;

/// Parses and validates a `corpus.json` document.
///
/// Throws Error with MalformedManifest (syntax, wrong types, wrong schema
/// version), MissingField, DuplicateId or InvalidRecord. The detail names the
/// offending record id and field.
CorpusManifest parse_manifest(std::string_view bytes);

std::string serialize_manifest(const CorpusManifest& manifest);

/// Empty result iff every VideoRecord invariant holds.
std::vector<std::string> validate_record(const VideoRecord& record);

nlohmann::json to_json(const VideoRecord& record);

}  // namespace vidreq
