#pragma once

#include <string>
#include <vector>

#include "vidreq/core/rng.hpp"
#include "vidreq/relevance/dataset.hpp"

namespace corpora {

// Two classes, each drawing 8-20 words from its own 50-word vocabulary.
inline std::vector<vidreq::relevance::LabeledExample> disjoint_vocabulary(std::size_t per_class, std::uint64_t seed) {
    vidreq::Rng rng(seed);
    std::vector<vidreq::relevance::LabeledExample> out;
    for (int cls = 0; cls < 2; ++cls) {
        const std::string stem = cls == 0 ? "rel" : "irr";
        for (std::size_t i = 0; i < per_class; ++i) {
            std::string text;
            const std::size_t n = 8 + rng.below(13);
            for (std::size_t k = 0; k < n; ++k) text += (k ? " " : "") + stem + "w" + std::to_string(rng.below(50));
            char id[16];
            std::snprintf(id, sizeof id, "%c%04zu", cls == 0 ? 'a' : 'b', i);
            out.push_back({id, text, cls == 0 ? vidreq::Label::Relevant : vidreq::Label::Irrelevant, "synthetic", ""});
        }
    }
    return out;
}

// Three tight Gaussian blobs in `dim` dimensions.
inline std::vector<std::vector<double>> blobs(std::size_t per_blob, std::size_t dim, double spread, std::uint64_t seed) {
    vidreq::Rng rng(seed);
    std::vector<std::vector<double>> centres(3, std::vector<double>(dim, 0.0));
    for (std::size_t c = 0; c < 3; ++c) centres[c][c % dim] = 10.0;
    std::vector<std::vector<double>> out;
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < per_blob; ++i) {
            auto p = centres[c];
            for (auto& x : p) x += spread * rng.normal();
            out.push_back(p);
        }
    return out;
}

}  // namespace corpora
