#include "vidreq/themes/terms.hpp"

#include <algorithm>
#include <cmath>

#include "vidreq/core/error.hpp"

namespace vidreq::themes {

std::map<int, std::map<std::string, double>> class_term_table(
    const std::map<int, std::vector<std::string>>& cluster_tokens) {
    if (cluster_tokens.empty()) throw Error(ErrorKind::EmptyCluster, "no clusters");
    std::map<int, std::map<std::string, std::size_t>> tf;
    std::map<std::string, std::size_t> f;
    std::size_t total = 0;
    for (const auto& [c, tokens] : cluster_tokens) {
        if (tokens.empty()) throw Error(ErrorKind::EmptyCluster, "cluster " + std::to_string(c) + " has no tokens");
        auto& counts = tf[c];
        for (const auto& t : tokens) {
            ++counts[t];
            ++f[t];
        }
        total += tokens.size();
    }
    std::map<int, std::map<std::string, double>> out;
    for (const auto& [c, counts] : tf) {
        auto& row = out[c];
        for (const auto& [t, _] : f) {
            auto it = counts.find(t);
            const double n = it == counts.end() ? 0.0 : static_cast<double>(it->second);
            row[t] = n * std::log(1.0 + static_cast<double>(total) / static_cast<double>(f.at(t)));
        }
    }
    return out;
}

std::map<int, std::vector<ScoredTerm>> class_term_scores(const std::map<int, std::vector<std::string>>& cluster_tokens,
                                                         std::size_t top) {
    std::map<int, std::vector<ScoredTerm>> out;
    for (const auto& [c, row] : class_term_table(cluster_tokens)) {
        std::vector<ScoredTerm> terms;
        for (const auto& [t, s] : row) {
            if (s > 0.0) terms.emplace_back(t, s);
        }
        std::sort(terms.begin(), terms.end(), [](const ScoredTerm& a, const ScoredTerm& b) {
            return a.second != b.second ? a.second > b.second : a.first < b.first;
        });
        if (terms.size() > top) terms.resize(top);
        out[c] = std::move(terms);
    }
    return out;
}

}  // namespace vidreq::themes
