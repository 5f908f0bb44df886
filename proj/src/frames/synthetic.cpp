#include "vidreq/frames/synthetic.hpp"

#include <algorithm>

#include "vidreq/core/rng.hpp"

namespace vidreq::frames {

GrayFrame random_texture(int width, int height, std::uint64_t seed) {
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + 17);
    GrayFrame f(width, height, static_cast<std::uint8_t>(rng.below(256)));
    const int rects = 6 + static_cast<int>(rng.below(10));
    for (int i = 0; i < rects; ++i) {
        const int x0 = static_cast<int>(rng.below(width));
        const int y0 = static_cast<int>(rng.below(height));
        const int rw = 1 + static_cast<int>(rng.below(std::max(1, width / 2)));
        const int rh = 1 + static_cast<int>(rng.below(std::max(1, height / 2)));
        const auto value = static_cast<std::uint8_t>(rng.below(256));
        for (int y = y0; y < std::min(height, y0 + rh); ++y) {
            for (int x = x0; x < std::min(width, x0 + rw); ++x) f.at(y, x) = value;
        }
    }
    return f;
}

std::vector<GrayFrame> scene_stream(const SceneSpec& spec) {
    std::vector<GrayFrame> frames;
    frames.reserve(spec.frame_count);
    std::vector<int> cuts = spec.cuts;
    std::sort(cuts.begin(), cuts.end());

    std::size_t scene = 0;
    GrayFrame base = random_texture(spec.width, spec.height, spec.seed);
    int scene_start = 0;
    for (int t = 0; t < spec.frame_count; ++t) {
        if (scene < cuts.size() && cuts[scene] == t) {
            ++scene;
            base = random_texture(spec.width, spec.height, spec.seed + 1000 * scene);
            scene_start = t;
        }
        GrayFrame f = base;
        if (spec.moving_patch) {
            const int offset = (t - scene_start) % std::max(1, spec.width - 8);
            for (int y = spec.height / 4; y < std::min(spec.height, spec.height / 4 + 8); ++y) {
                for (int x = offset; x < std::min(spec.width, offset + 8); ++x) f.at(y, x) = 255;
            }
        }
        frames.push_back(std::move(f));
    }
    return frames;
}

}  // namespace vidreq::frames
