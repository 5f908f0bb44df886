#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace vidreq::relevance {

using SparseVector = std::vector<std::pair<std::uint32_t, double>>;  // sorted by index

// TF-IDF over word_tokens(): raw term counts, smoothed idf
// ln((1 + n) / (1 + df)) + 1, rows L2-normalized. Terms seen in fewer than
// min_df training documents are dropped. Vocabulary indices follow sorted
// term order.
class TfidfVectorizer {
public:
    void fit(const std::vector<std::string>& docs, std::size_t min_df);
    SparseVector transform(const std::string& doc) const;

    std::size_t dimension() const { return terms_.size(); }
    const std::vector<std::string>& terms() const { return terms_; }
    const std::vector<double>& idf() const { return idf_; }

    nlohmann::json to_json() const;
    static TfidfVectorizer from_json(const nlohmann::json& j);

private:
    std::vector<std::string> terms_;
    std::map<std::string, std::uint32_t> index_;
    std::vector<double> idf_;
};

}  // namespace vidreq::relevance
