#pragma once

#include <cstdint>
#include <vector>

#include "vidreq/frames/image.hpp"

namespace vidreq::frames {

// Deterministic test imagery: blocky textures made of random rectangles.
GrayFrame random_texture(int width, int height, std::uint64_t seed);

struct SceneSpec {
    int width = 64;
    int height = 64;
    int frame_count = 0;
    std::vector<int> cuts;      // frame indices where a new scene starts
    bool moving_patch = false;  // an 8x8 patch drifting one pixel per frame
    std::uint64_t seed = 1;
};

// Static scenes separated by hard cuts, optionally with a drifting patch.
std::vector<GrayFrame> scene_stream(const SceneSpec& spec);

}  // namespace vidreq::frames
