#include "vidreq/core/manifest.hpp"

#include <cmath>
#include <set>

#include "vidreq/core/error.hpp"

namespace vidreq {

namespace {

using nlohmann::json;

constexpr std::string_view kRecordFields[] = {
    "id", "platform", "product", "category", "title", "description", "creator_handle",
    "is_official_account", "duration_s", "view_count", "media_path", "language",
};

bool is_known_field(const std::string& key) {
    for (auto f : kRecordFields) {
        if (key == f) return true;
    }
    return false;
}

std::string where(const std::string& id, std::string_view field) {
    return "record '" + id + "' field '" + std::string(field) + "'";
}

const json& require(const json& obj, const std::string& id, std::string_view field) {
    auto it = obj.find(std::string(field));
    if (it == obj.end()) throw Error(ErrorKind::MissingField, where(id, field));
    return *it;
}

std::string require_string(const json& obj, const std::string& id, std::string_view field) {
    const json& v = require(obj, id, field);
    if (!v.is_string()) throw Error(ErrorKind::MalformedManifest, where(id, field) + " must be a string");
    return v.get<std::string>();
}

VideoRecord parse_record(const json& obj, std::size_t index) {
    if (!obj.is_object()) {
        throw Error(ErrorKind::MalformedManifest, "record #" + std::to_string(index) + " is not an object");
    }
    // Until the id is known, errors name the record by position.
    std::string id = "#" + std::to_string(index);
    VideoRecord r;
    r.id = require_string(obj, id, "id");
    id = r.id;

    auto platform = parse_platform(require_string(obj, id, "platform"));
    if (!platform) throw Error(ErrorKind::MalformedManifest, where(id, "platform") + " must be TikTok or YouTube");
    r.platform = *platform;

    auto category = parse_category(require_string(obj, id, "category"));
    if (!category) throw Error(ErrorKind::MalformedManifest, where(id, "category") + " is not a known category");
    r.category = *category;

    r.product = require_string(obj, id, "product");
    r.title = require_string(obj, id, "title");
    r.description = require_string(obj, id, "description");
    r.creator_handle = require_string(obj, id, "creator_handle");

    const json& official = require(obj, id, "is_official_account");
    if (!official.is_boolean()) throw Error(ErrorKind::MalformedManifest, where(id, "is_official_account") + " must be a boolean");
    r.is_official_account = official.get<bool>();

    const json& duration = require(obj, id, "duration_s");
    if (!duration.is_number()) throw Error(ErrorKind::MalformedManifest, where(id, "duration_s") + " must be a number");
    r.duration_s = duration.get<double>();

    const json& views = require(obj, id, "view_count");
    if (!views.is_number_integer()) throw Error(ErrorKind::MalformedManifest, where(id, "view_count") + " must be an integer");
    r.view_count = views.get<std::int64_t>();

    if (auto it = obj.find("media_path"); it != obj.end() && !it->is_null()) {
        if (!it->is_string()) throw Error(ErrorKind::MalformedManifest, where(id, "media_path") + " must be a string or null");
        r.media_path = it->get<std::string>();
    }
    if (auto it = obj.find("language"); it != obj.end()) {
        if (!it->is_string()) throw Error(ErrorKind::MalformedManifest, where(id, "language") + " must be a string");
        r.language = it->get<std::string>();
    }

    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!is_known_field(it.key())) r.extra[it.key()] = it.value();
    }

    auto violations = validate_record(r);
    if (!violations.empty()) {
        throw Error(ErrorKind::InvalidRecord, "record '" + id + "': " + violations.front());
    }
    return r;
}

}  // namespace

std::vector<std::string> validate_record(const VideoRecord& record) {
    std::vector<std::string> out;
    if (record.id.empty()) out.emplace_back("id must be non-empty");
    if (!(record.duration_s > 0.0) || !std::isfinite(record.duration_s)) out.emplace_back("duration_s must be > 0");
    if (record.view_count < 0) out.emplace_back("view_count must be ≥ 0");
    if (record.language.empty()) out.emplace_back("language must be a BCP-47 tag or \"und\"");
    return out;
}

CorpusManifest parse_manifest(std::string_view bytes) {
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::MalformedManifest, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::MalformedManifest, "manifest must be a JSON object");

    CorpusManifest m;
    auto version = doc.find("schema_version");
    if (version == doc.end()) throw Error(ErrorKind::MissingField, "manifest field 'schema_version'");
    if (!version->is_number_integer() || version->get<int>() != kManifestSchemaVersion) {
        throw Error(ErrorKind::MalformedManifest, "unsupported schema_version " + version->dump());
    }
    m.schema_version = kManifestSchemaVersion;

    auto records = doc.find("records");
    if (records == doc.end()) throw Error(ErrorKind::MissingField, "manifest field 'records'");
    if (!records->is_array()) throw Error(ErrorKind::MalformedManifest, "'records' must be an array");

    std::set<std::string> seen;
    for (std::size_t i = 0; i < records->size(); ++i) {
        VideoRecord r = parse_record((*records)[i], i);
        if (!seen.insert(r.id).second) throw Error(ErrorKind::DuplicateId, r.id);
        m.records.push_back(std::move(r));
    }

    if (auto terms = doc.find("search_terms"); terms != doc.end()) {
        if (!terms->is_object()) throw Error(ErrorKind::MalformedManifest, "'search_terms' must be an object");
        for (auto it = terms->begin(); it != terms->end(); ++it) {
            if (!it->is_string()) throw Error(ErrorKind::MalformedManifest, "search term for '" + it.key() + "' must be a string");
            m.search_terms[it.key()] = it->get<std::string>();
        }
    }

    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() != "schema_version" && it.key() != "records" && it.key() != "search_terms") {
            m.extra[it.key()] = it.value();
        }
    }
    return m;
}

json to_json(const VideoRecord& r) {
    json j = r.extra;
    j["id"] = r.id;
    j["platform"] = to_string(r.platform);
    j["product"] = r.product;
    j["category"] = to_string(r.category);
    j["title"] = r.title;
    j["description"] = r.description;
    j["creator_handle"] = r.creator_handle;
    j["is_official_account"] = r.is_official_account;
    j["duration_s"] = r.duration_s;
    j["view_count"] = r.view_count;
    j["media_path"] = r.media_path ? json(*r.media_path) : json();
    j["language"] = r.language;
    return j;
}

std::string serialize_manifest(const CorpusManifest& manifest) {
    json doc = manifest.extra;
    doc["schema_version"] = manifest.schema_version;
    doc["search_terms"] = manifest.search_terms;
    json records = json::array();
    for (const auto& r : manifest.records) records.push_back(to_json(r));
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

}  // namespace vidreq
