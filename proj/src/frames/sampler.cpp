#include "vidreq/frames/sampler.hpp"

#include <algorithm>
#include <cctype>

#include "vidreq/core/error.hpp"
#include "vidreq/core/io.hpp"
#include "vidreq/frames/saliency.hpp"

namespace vidreq::frames {

namespace fs = std::filesystem;

CandidateSelector::CandidateSelector(double fps, Platform platform, SamplerConfig config)
    : fps_(fps), min_gap_s_(config.min_gap_s(platform)), config_(config) {
    if (!(fps > 0.0)) throw Error(ErrorKind::InvalidStream, "fps must be > 0");
    if (config_.slice_length < 2) throw Error(ErrorKind::InvalidConfig, "slice length must be >= 2");
}

std::optional<CandidateFrame> CandidateSelector::push(const GrayFrame& frame) {
    const int t = next_index_;
    if (t == 0) {
        width_ = frame.width;
        height_ = frame.height;
    } else if (frame.width != width_ || frame.height != height_) {
        throw Error(ErrorKind::InvalidStream, "frame " + std::to_string(t) + " changes dimensions");
    }

    SliceSet slices = extract_slices(compute_saliency(frame), config_.slice_length);
    ++next_index_;

    if (t == 0) {
        previous_slices_ = std::move(slices);
        last_candidate_ = 0;
        return CandidateFrame{0, 0.0, {0.0, 0.0, 0.0}, CandidateReason::Initial};
    }

    SliceVector divergence{};
    for (std::size_t k = 0; k < 3; ++k) {
        divergence[k] = kl_divergence(slices.slices[k], previous_slices_.slices[k]);
    }
    int exceeded = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        if (divergence[k] - previous_divergence_[k] > config_.threshold[k]) ++exceeded;
    }
    previous_slices_ = std::move(slices);
    previous_divergence_ = divergence;

    const bool jump = config_.rule == SliceRule::All ? exceeded == 3 : exceeded > 0;
    if (!jump) return std::nullopt;
    const double since_last_s = static_cast<double>(t - last_candidate_) / fps_;
    if (since_last_s < min_gap_s_ - 1e-9) return std::nullopt;

    last_candidate_ = t;
    return CandidateFrame{t, static_cast<double>(t) / fps_, divergence, CandidateReason::DivergenceJump};
}

std::vector<CandidateFrame> select_candidates(const FrameStream& stream, const SamplerConfig& config) {
    if (stream.frames.empty()) throw Error(ErrorKind::InvalidStream, "stream '" + stream.record_id + "' has no frames");
    CandidateSelector selector(stream.fps, stream.platform_profile, config);
    std::vector<CandidateFrame> out;
    for (const auto& f : stream.frames) {
        if (auto c = selector.push(f)) out.push_back(*c);
    }
    return out;
}

FrameDirectory scan_frame_directory(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw Error(ErrorKind::MissingFrames, dir.string());
    const fs::path meta_path = dir / "meta.json";
    if (!fs::exists(meta_path)) throw Error(ErrorKind::MissingFrames, meta_path.string());

    FrameDirectory out;
    nlohmann::json meta = read_json(meta_path);
    try {
        out.fps = meta.at("fps").get<double>();
        auto platform = parse_platform(meta.at("platform").get<std::string>());
        if (!platform) throw Error(ErrorKind::InvalidStream, meta_path.string() + ": unknown platform");
        out.platform = *platform;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidStream, meta_path.string() + ": " + e.what());
    }
    if (!(out.fps > 0.0)) throw Error(ErrorKind::InvalidStream, meta_path.string() + ": fps must be > 0");

    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (name.size() != 10 || entry.path().extension() != ".pgm") continue;
        if (!std::all_of(name.begin(), name.begin() + 6, [](unsigned char c) { return std::isdigit(c); })) continue;
        out.frame_files.push_back(entry.path());
    }
    std::sort(out.frame_files.begin(), out.frame_files.end());
    if (out.frame_files.empty()) throw Error(ErrorKind::MissingFrames, dir.string() + " has no NNNNNN.pgm frames");
    return out;
}

std::vector<CandidateFrame> select_candidates(const FrameDirectory& dir, const SamplerConfig& config) {
    CandidateSelector selector(dir.fps, dir.platform, config);
    std::vector<CandidateFrame> out;
    for (const auto& path : dir.frame_files) {
        if (auto c = selector.push(read_pgm(path))) out.push_back(*c);
    }
    return out;
}

std::string_view to_string(CandidateReason reason) {
    return reason == CandidateReason::Initial ? "Initial" : "DivergenceJump";
}

nlohmann::json to_json(const CandidateFrame& c) {
    return {
        {"frame_index", c.frame_index},
        {"timestamp_s", c.timestamp_s},
        {"divergence", {c.divergence[0], c.divergence[1], c.divergence[2]}},
        {"reason", to_string(c.reason)},
    };
}

CandidateFrame candidate_from_json(const nlohmann::json& j) {
    try {
        CandidateFrame c;
        c.frame_index = j.at("frame_index").get<int>();
        c.timestamp_s = j.at("timestamp_s").get<double>();
        const auto& d = j.at("divergence");
        for (std::size_t k = 0; k < 3; ++k) c.divergence[k] = d.at(k).get<double>();
        c.reason = j.at("reason").get<std::string>() == "Initial" ? CandidateReason::Initial
                                                                  : CandidateReason::DivergenceJump;
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedManifest, std::string("candidate: ") + e.what());
    }
}

}  // namespace vidreq::frames
