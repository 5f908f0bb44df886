#include "vidreq/extract/extract.hpp"

#include <algorithm>
#include <fstream>

#include "vidreq/core/error.hpp"
#include "vidreq/core/text.hpp"
#include "vidreq/frames/image.hpp"

namespace vidreq::extract {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::optional<Transcript> transcribe(const VideoRecord& record, const AsrBackend& asr, const fs::path& media_root) {
    if (!record.media_path) throw Error(ErrorKind::MediaUnreadable, "record '" + record.id + "' has no media");
    fs::path media = *record.media_path;
    if (media.is_relative() && !media_root.empty()) media = media_root / media;
    if (!std::ifstream(media, std::ios::binary)) {
        throw Error(ErrorKind::MediaUnreadable, "record '" + record.id + "': " + media.string());
    }

    AsrOutput raw = asr.run(media, kMaxTranscribeSeconds);
    std::vector<AudioSegment> segs;
    for (auto& s : raw.segments) {
        s.text = trim(std::move(s.text));
        if (s.text.empty() || s.start_s >= kMaxTranscribeSeconds || s.end_s < s.start_s) continue;
        s.start_s = std::max(0.0, s.start_s);
        s.end_s = std::min(s.end_s, kMaxTranscribeSeconds);
        segs.push_back(std::move(s));
    }
    std::stable_sort(segs.begin(), segs.end(),
                     [](const AudioSegment& a, const AudioSegment& b) { return a.start_s < b.start_s; });

    Transcript t;
    t.record_id = record.id;
    t.language = raw.language;
    for (auto& s : segs) {
        if (!t.segments.empty()) {
            s.start_s = std::max(s.start_s, t.segments.back().end_s);
            if (s.start_s > s.end_s) s.end_s = s.start_s;
        }
        t.segments.push_back(std::move(s));
    }
    if (t.segments.empty()) return std::nullopt;

    std::vector<std::string> texts;
    for (const auto& s : t.segments) texts.push_back(s.text);
    t.text = join(texts, " ");
    return t;
}

std::string_view to_string(OcrMode mode) {
    return mode == OcrMode::FullFrame ? "FullFrame" : "LargeTextSupplement";
}

OcrMode route_ocr(bool has_audio_text) {
    return has_audio_text ? OcrMode::LargeTextSupplement : OcrMode::FullFrame;
}

std::vector<TextRegion> filter_regions(const std::vector<TextRegion>& regions, int frame_height, OcrMode mode,
                                       const RegionThresholds& thresholds) {
    if (frame_height <= 0) throw Error(ErrorKind::InvalidConfig, "frame height must be > 0");
    const double min_h = thresholds.for_mode(mode) * frame_height;
    std::vector<TextRegion> out;
    for (const auto& r : regions) {
        if (r.h >= min_h) out.push_back(r);
    }
    return out;
}

std::vector<VisualLine> dedupe_visual(const std::vector<VisualLine>& lines, double window_s) {
    std::vector<VisualLine> out;
    std::vector<std::string> folded;
    folded.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        folded.push_back(case_fold(lines[i].text));
        bool repeat = false;
        for (std::size_t j = i; j-- > 0;) {
            if (lines[i].frame_ts_s - lines[j].frame_ts_s > window_s) break;
            if (folded[j] == folded[i]) {
                repeat = true;
                break;
            }
        }
        if (!repeat) out.push_back(lines[i]);
    }
    return out;
}

TextBundle assemble_bundle(const VideoRecord& record, const std::optional<Transcript>& transcript,
                           const VisualText& visual, const std::string& assembled_at) {
    if (transcript && transcript->record_id != record.id) {
        throw Error(ErrorKind::RecordMismatch, "transcript of '" + transcript->record_id + "' for '" + record.id + "'");
    }
    if (visual.record_id != record.id) {
        throw Error(ErrorKind::RecordMismatch, "visual text of '" + visual.record_id + "' for '" + record.id + "'");
    }
    TextBundle b;
    b.record_id = record.id;
    if (transcript) {
        b.audio_text = transcript->text;
        b.audio_segments = transcript->segments;
        b.audio_language = transcript->language;
    }
    b.has_audio_text = !b.audio_text.empty();
    b.visual_lines = visual.lines;
    b.assembled_at = assembled_at;

    auto violations = validate_bundle(b, record.duration_s);
    if (!violations.empty()) {
        throw Error(ErrorKind::InvalidRecord, "bundle '" + record.id + "': " + violations.front());
    }
    return b;
}

TextBundle extract_record(const VideoRecord& record, const std::vector<frames::CandidateFrame>& candidates,
                          const std::vector<fs::path>& frame_files, const ExtractionBackends& backends,
                          const ExtractionConfig& config) {
    auto transcript = transcribe(record, *backends.asr, config.media_root);
    const OcrMode mode = route_ocr(transcript.has_value());
    const OcrBackend& ocr = mode == OcrMode::FullFrame ? *backends.full_frame_ocr : *backends.supplement_ocr;

    std::vector<VisualLine> lines;
    for (const auto& c : candidates) {
        if (c.frame_index < 0 || static_cast<std::size_t>(c.frame_index) >= frame_files.size()) {
            throw Error(ErrorKind::MissingFrames,
                        "record '" + record.id + "' has no frame " + std::to_string(c.frame_index));
        }
        const fs::path& frame = frame_files[c.frame_index];
        const auto size = frames::read_pgm_size(frame);

        std::vector<TextRegion> regions;
        for (auto& raw : ocr.run(frame)) {
            const bool inside = raw.w > 0 && raw.h > 0 && raw.x >= 0 && raw.y >= 0 &&
                                raw.x + raw.w <= size.width && raw.y + raw.h <= size.height;
            if (!inside) continue;
            regions.push_back({c.frame_index, raw.x, raw.y, raw.w, raw.h, std::move(raw.text), {}});
        }
        for (auto& r : filter_regions(regions, size.height, mode, config.thresholds)) {
            r.corrected_text = correct_text(r.raw_text, *backends.lexicon);
            if (!r.corrected_text.empty()) lines.push_back({c.timestamp_s, r.corrected_text});
        }
    }

    return assemble_bundle(record, transcript, VisualText{record.id, dedupe_visual(lines)}, config.assembled_at);
}

}  // namespace vidreq::extract
