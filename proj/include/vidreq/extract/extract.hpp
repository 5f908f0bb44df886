#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vidreq/core/model.hpp"
#include "vidreq/extract/adapters.hpp"
#include "vidreq/extract/spell.hpp"
#include "vidreq/frames/sampler.hpp"

namespace vidreq::extract {

struct Transcript {
    std::string record_id;
    std::string text;
    std::vector<AudioSegment> segments;
    std::optional<std::string> language;
};

/// Transcribes at most the first 1800 s of a record's audio.
///
/// Returns std::nullopt ("no audio") when the backend reports no speech
/// segments, which covers media without an audio track. Segments are sorted,
/// clipped to the cap and made non-overlapping. Relative media paths resolve
/// against `media_root`.
///
/// Throws MediaUnreadable when the record has no media or it cannot be read,
/// and propagates the backend's BackendUnavailable.
std::optional<Transcript> transcribe(const VideoRecord& record, const AsrBackend& asr,
                                     const std::filesystem::path& media_root = {});

enum class OcrMode { FullFrame, LargeTextSupplement };

std::string_view to_string(OcrMode mode);

// No audio text: all visible text carries the content. Otherwise visual text
// only supplements the transcript.
OcrMode route_ocr(bool has_audio_text);

struct TextRegion {
    int frame_index = 0;
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
    std::string raw_text;
    std::string corrected_text;

    bool operator==(const TextRegion&) const = default;
};

// Minimum text height as a fraction of frame height, per OCR mode.
struct RegionThresholds {
    double full_frame = 0.02;
    double supplement = 0.06;

    double for_mode(OcrMode mode) const { return mode == OcrMode::FullFrame ? full_frame : supplement; }
};

std::vector<TextRegion> filter_regions(const std::vector<TextRegion>& regions, int frame_height, OcrMode mode,
                                       const RegionThresholds& thresholds = {});

inline constexpr double kDedupeWindowSeconds = 5.0;

// Drops a line whose case-folded text equals a line up to 5 s earlier.
// Input must be sorted by timestamp.
std::vector<VisualLine> dedupe_visual(const std::vector<VisualLine>& lines,
                                      double window_s = kDedupeWindowSeconds);

struct VisualText {
    std::string record_id;
    std::vector<VisualLine> lines;
};

// Throws RecordMismatch if the inputs name another record, InvalidRecord if
// the result would break a TextBundle invariant.
TextBundle assemble_bundle(const VideoRecord& record, const std::optional<Transcript>& transcript,
                           const VisualText& visual, const std::string& assembled_at);

struct ExtractionConfig {
    RegionThresholds thresholds;
    std::filesystem::path media_root;
    std::string assembled_at = "1970-01-01T00:00:00Z";
};

struct ExtractionBackends {
    const AsrBackend* asr = nullptr;
    const OcrBackend* full_frame_ocr = nullptr;
    const OcrBackend* supplement_ocr = nullptr;
    const FrequencyLexicon* lexicon = nullptr;
};

/// Full per-record extraction: transcript, OCR of candidate frames routed by
/// audio presence, small-text discard, spelling correction, de-duplication.
/// `frame_files[i]` is the image for frame index i.
TextBundle extract_record(const VideoRecord& record, const std::vector<frames::CandidateFrame>& candidates,
                          const std::vector<std::filesystem::path>& frame_files,
                          const ExtractionBackends& backends, const ExtractionConfig& config);

}  // namespace vidreq::extract
