#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vidreq::themes {

using ScoredTerm = std::pair<std::string, double>;

inline constexpr std::size_t kTopTerms = 10;

// Class-based TF-IDF over clusters of tokens:
//   score(t, c) = tf(t, c) * ln(1 + A / f(t))
// with tf(t, c) the count of t in cluster c, f(t) its count over all
// clusters and A the token count of all clusters together. Returns the
// `top` best terms per cluster, highest score first, ties alphabetical.
// Throws EmptyCluster for no clusters or a cluster without tokens.
std::map<int, std::vector<ScoredTerm>> class_term_scores(const std::map<int, std::vector<std::string>>& cluster_tokens,
                                                         std::size_t top = kTopTerms);

// Full score table, every term of every cluster (absent terms score 0).
std::map<int, std::map<std::string, double>> class_term_table(
    const std::map<int, std::vector<std::string>>& cluster_tokens);

}  // namespace vidreq::themes
