#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vidreq/annotate/store.hpp"
#include "vidreq/themes/cluster.hpp"
#include "vidreq/themes/embed.hpp"
#include "vidreq/themes/terms.hpp"

namespace vidreq::themes {

inline constexpr const char* kUnnamed = "(unnamed)";

struct ThemeCluster {
    int cluster_id = 0;
    std::string product;
    std::vector<std::string> record_ids;
    std::vector<ScoredTerm> top_terms;
    std::optional<std::string> theme_name;
};

struct ProductThemes {
    ClusteringRun run;
    EmbeddingSource source = EmbeddingSource::Fallback;
    std::vector<ThemeCluster> clusters;
};

// Term bag for theme descriptions: word tokens without English stopwords.
std::vector<std::string> theme_tokens(const std::string& text);

// Documents must be in canonical (sorted record id) order. `embeddings`
// rows line up with `record_ids`.
ProductThemes cluster_product(const std::string& product, const std::vector<std::string>& record_ids,
                              const std::vector<std::string>& texts, const EmbeddingMatrix& embeddings,
                              std::uint64_t seed, KRange range = {});

nlohmann::json to_json(const ProductThemes& p);
ProductThemes product_themes_from_json(const nlohmann::json& j);

struct RollupRow {
    std::string theme;  // case-folded name
    std::vector<std::string> products;
};

struct ThemeReport {
    std::vector<ProductThemes> products;  // sorted by product
    std::vector<RollupRow> rollup;        // most products first, then by name
};

// Attaches names to clusters and counts, per case-folded name, the products
// that have a cluster with that name. Unnamed clusters stay out of the rollup.
ThemeReport build_theme_report(std::vector<ProductThemes> products,
                               const std::map<annotate::ThemeKey, std::string>& names);

nlohmann::json rollup_to_json(const ThemeReport& r);
std::string rollup_to_markdown(const ThemeReport& r);

}  // namespace vidreq::themes
