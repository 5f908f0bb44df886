#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vidreq/core/model.hpp"
#include "vidreq/frames/divergence.hpp"
#include "vidreq/frames/image.hpp"

namespace vidreq::frames {

using SliceVector = std::array<double, 3>;  // vertical, horizontal, diagonal

enum class CandidateReason { Initial, DivergenceJump };

struct CandidateFrame {
    int frame_index = 0;
    double timestamp_s = 0.0;
    SliceVector divergence{};
    CandidateReason reason = CandidateReason::Initial;

    bool operator==(const CandidateFrame&) const = default;
};

// How the per-slice threshold tests combine into a selection.
enum class SliceRule { All, Any };

struct SamplerConfig {
    SliceVector threshold{1e-4, 1e-4, 1e-4};
    std::size_t slice_length = 64;
    double tiktok_min_gap_s = 1.5;
    double youtube_min_gap_s = 2.5;
    SliceRule rule = SliceRule::All;

    double min_gap_s(Platform p) const { return p == Platform::TikTok ? tiktok_min_gap_s : youtube_min_gap_s; }
};

struct FrameStream {
    std::string record_id;
    double fps = 0.0;
    std::vector<GrayFrame> frames;
    Platform platform_profile = Platform::TikTok;
};

/// Streaming form of candidate selection: frames are pushed in order.
///
/// s_t holds the KL divergence of each slice of frame t against the same
/// slice of frame t-1 (s_0 = 0). Frame 0 is always selected. Frame t > 0 is
/// selected when s_t - s_{t-1} exceeds the threshold on every slice (or on
/// any slice under SliceRule::Any) and at least the platform's minimum gap
/// has elapsed since the previous candidate.
class CandidateSelector {
public:
    CandidateSelector(double fps, Platform platform, SamplerConfig config = {});

    std::optional<CandidateFrame> push(const GrayFrame& frame);

    int frames_seen() const { return next_index_; }

private:
    double fps_;
    double min_gap_s_;
    SamplerConfig config_;
    int next_index_ = 0;
    int last_candidate_ = -1;
    int width_ = 0;
    int height_ = 0;
    SliceSet previous_slices_;
    SliceVector previous_divergence_{};
};

std::vector<CandidateFrame> select_candidates(const FrameStream& stream, const SamplerConfig& config = {});

// Frames directory layout: NNNNNN.pgm files (sequential) plus meta.json with
// {"fps": number, "platform": "TikTok"|"YouTube"}.
struct FrameDirectory {
    double fps = 0.0;
    Platform platform = Platform::TikTok;
    std::vector<std::filesystem::path> frame_files;  // in frame order
};

// Throws Error(MissingFrames) if the directory, meta.json or the frames are absent.
FrameDirectory scan_frame_directory(const std::filesystem::path& dir);

std::vector<CandidateFrame> select_candidates(const FrameDirectory& dir, const SamplerConfig& config = {});

std::string_view to_string(CandidateReason reason);
nlohmann::json to_json(const CandidateFrame& c);
CandidateFrame candidate_from_json(const nlohmann::json& j);

}  // namespace vidreq::frames
