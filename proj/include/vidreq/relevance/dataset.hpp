#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vidreq/core/model.hpp"

namespace vidreq::relevance {

enum class TextVariant { AudioOnly, VisualOnly, AudioVisual };
enum class PlatformScope { TikTok, YouTube, Both };

struct DatasetVariant {
    TextVariant variant = TextVariant::AudioVisual;
    PlatformScope platform = PlatformScope::Both;

    bool operator==(const DatasetVariant&) const = default;
};

std::string_view to_string(TextVariant v);    // "audio", "visual", "both"
std::string_view to_string(PlatformScope p);  // "TikTok", "YouTube", "Both"
std::optional<TextVariant> parse_text_variant(std::string_view s);
std::optional<PlatformScope> parse_platform_scope(std::string_view s);
bool in_scope(Platform p, PlatformScope scope);

inline constexpr std::string_view kFieldSeparator = " ⟂ ";

/// title, description, then the variant's body, joined by kFieldSeparator.
/// AudioVisual's body is the audio text followed by the visual lines.
/// Throws RecordMismatch when the bundle belongs to another record.
std::string assemble_text(const TextBundle& bundle, const VideoRecord& record, TextVariant variant);

struct LabeledExample {
    std::string record_id;
    std::string text;
    Label label = Label::Relevant;
    std::string annotator;
    std::string session;

    bool operator==(const LabeledExample&) const = default;
};

struct DatasetSplit {
    std::vector<LabeledExample> train;
    std::vector<LabeledExample> test;
};

inline constexpr double kTestFraction = 0.2;

/// Stratified 80/20 split with a balanced test set.
///
/// Examples are put in record-id order, each class is shuffled with the
/// seeded generator and round(0.2 n) of it (at least one, at most n - 1)
/// goes to test. The larger test class is then cut down to the size of the
/// smaller one; the cut examples are not used. Both outputs are sorted by
/// record id.
///
/// Throws InsufficientClassData unless each class has at least two examples,
/// InvalidRecord on a repeated record id.
DatasetSplit split_dataset(const std::vector<LabeledExample>& examples, std::uint64_t seed);

nlohmann::json to_json(const LabeledExample& e);
LabeledExample labeled_example_from_json(const nlohmann::json& j);

}  // namespace vidreq::relevance
