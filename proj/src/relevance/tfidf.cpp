#include "vidreq/relevance/tfidf.hpp"

#include <cmath>
#include <set>

#include "vidreq/core/error.hpp"
#include "vidreq/core/text.hpp"

namespace vidreq::relevance {

void TfidfVectorizer::fit(const std::vector<std::string>& docs, std::size_t min_df) {
    std::map<std::string, std::size_t> df;
    for (const auto& d : docs) {
        auto tokens = word_tokens(d);
        std::set<std::string> unique(tokens.begin(), tokens.end());
        for (const auto& t : unique) ++df[t];
    }
    terms_.clear();
    index_.clear();
    idf_.clear();
    const double n = static_cast<double>(docs.size());
    for (const auto& [term, count] : df) {
        if (count < min_df) continue;
        index_[term] = static_cast<std::uint32_t>(terms_.size());
        terms_.push_back(term);
        idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
    }
}

SparseVector TfidfVectorizer::transform(const std::string& doc) const {
    std::map<std::uint32_t, double> counts;
    for (const auto& t : word_tokens(doc)) {
        if (auto it = index_.find(t); it != index_.end()) counts[it->second] += 1.0;
    }
    SparseVector v;
    double norm = 0.0;
    for (const auto& [idx, tf] : counts) {
        const double w = tf * idf_[idx];
        v.emplace_back(idx, w);
        norm += w * w;
    }
    if (norm > 0.0) {
        norm = std::sqrt(norm);
        for (auto& [idx, w] : v) w /= norm;
    }
    return v;
}

nlohmann::json TfidfVectorizer::to_json() const { return {{"terms", terms_}, {"idf", idf_}}; }

TfidfVectorizer TfidfVectorizer::from_json(const nlohmann::json& j) {
    TfidfVectorizer v;
    try {
        v.terms_ = j.at("terms").get<std::vector<std::string>>();
        v.idf_ = j.at("idf").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedManifest, std::string("tfidf: ") + e.what());
    }
    if (v.terms_.size() != v.idf_.size()) throw Error(ErrorKind::MalformedManifest, "tfidf: terms/idf size mismatch");
    for (std::uint32_t i = 0; i < v.terms_.size(); ++i) v.index_[v.terms_[i]] = i;
    return v;
}

}  // namespace vidreq::relevance
