#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace vidreq {

using WordSet = std::unordered_set<std::string>;

// Bundled English stopword list (case-folded, ~180 words).
const WordSet& english_stopwords();

struct StopwordProfile {
    std::string_view tag;
    const WordSet* words;
};

// English first, then the other languages the heuristic can name.
const std::vector<StopwordProfile>& stopword_profiles();

}  // namespace vidreq
