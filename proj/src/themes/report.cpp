#include "vidreq/themes/report.hpp"

#include <algorithm>
#include <set>

#include "vidreq/core/error.hpp"
#include "vidreq/core/stopwords.hpp"
#include "vidreq/core/text.hpp"

namespace vidreq::themes {

std::vector<std::string> theme_tokens(const std::string& text) {
    const auto& stop = english_stopwords();
    std::vector<std::string> out;
    for (auto& t : word_tokens(text)) {
        if (!stop.contains(t)) out.push_back(std::move(t));
    }
    return out;
}

ProductThemes cluster_product(const std::string& product, const std::vector<std::string>& record_ids,
                              const std::vector<std::string>& texts, const EmbeddingMatrix& embeddings,
                              std::uint64_t seed, KRange range) {
    if (record_ids.size() != texts.size() || embeddings.vectors.size() != texts.size()) {
        throw Error(ErrorKind::LengthMismatch, "record ids, texts and embeddings differ in length");
    }
    ProductThemes out;
    out.source = embeddings.source;
    out.run = select_k(embeddings, seed, range);
    out.run.product = product;

    std::map<int, std::vector<std::string>> bags;
    std::vector<ThemeCluster> clusters(out.run.chosen_k);
    for (int c = 0; c < out.run.chosen_k; ++c) {
        clusters[c].cluster_id = c;
        clusters[c].product = product;
    }
    for (std::size_t i = 0; i < texts.size(); ++i) {
        const int c = out.run.assignment[i];
        clusters[c].record_ids.push_back(record_ids[i]);
        auto tokens = theme_tokens(texts[i]);
        auto& bag = bags[c];
        bag.insert(bag.end(), tokens.begin(), tokens.end());
    }
    // Clusters whose documents carry no content words get no terms.
    std::map<int, std::vector<std::string>> scored;
    for (auto& [c, bag] : bags) {
        if (!bag.empty()) scored.emplace(c, std::move(bag));
    }
    if (!scored.empty()) {
        for (auto& [c, terms] : class_term_scores(scored)) clusters[c].top_terms = std::move(terms);
    }
    out.clusters = std::move(clusters);
    return out;
}

nlohmann::json to_json(const ProductThemes& p) {
    nlohmann::json clusters = nlohmann::json::array();
    for (const auto& c : p.clusters) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [t, s] : c.top_terms) terms.push_back({{"term", t}, {"score", s}});
        clusters.push_back({
            {"cluster_id", c.cluster_id},
            {"record_ids", c.record_ids},
            {"top_terms", terms},
            {"theme_name", c.theme_name ? nlohmann::json(*c.theme_name) : nlohmann::json(kUnnamed)},
        });
    }
    auto run = to_json(p.run);
    run["embedding"] = to_string(p.source);
    return {{"product", p.run.product}, {"run", run}, {"clusters", clusters}};
}

ProductThemes product_themes_from_json(const nlohmann::json& j) {
    try {
        ProductThemes p;
        const auto& run = j.at("run");
        p.run.product = j.at("product").get<std::string>();
        p.run.k_tried = run.at("k_tried").get<std::vector<int>>();
        for (const auto& [k, s] : run.at("silhouettes").items()) p.run.silhouettes[std::stoi(k)] = s.get<double>();
        p.run.chosen_k = run.at("chosen_k").get<int>();
        p.run.seed = run.at("seed").get<std::uint64_t>();
        p.run.inertia = run.value("inertia", 0.0);
        p.source = run.value("embedding", "fallback") == "external" ? EmbeddingSource::External
                                                                     : EmbeddingSource::Fallback;
        for (const auto& cj : j.at("clusters")) {
            ThemeCluster c;
            c.cluster_id = cj.at("cluster_id").get<int>();
            c.product = p.run.product;
            c.record_ids = cj.at("record_ids").get<std::vector<std::string>>();
            for (const auto& t : cj.at("top_terms")) {
                c.top_terms.emplace_back(t.at("term").get<std::string>(), t.at("score").get<double>());
            }
            const auto name = cj.value("theme_name", std::string(kUnnamed));
            if (name != kUnnamed) c.theme_name = name;
            p.clusters.push_back(std::move(c));
        }
        // Rebuild the assignment in sorted record-id order.
        std::map<std::string, int> where;
        for (const auto& c : p.clusters) {
            for (const auto& r : c.record_ids) where[r] = c.cluster_id;
        }
        for (const auto& [_, c] : where) p.run.assignment.push_back(c);
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedManifest, std::string("theme file: ") + e.what());
    }
}

ThemeReport build_theme_report(std::vector<ProductThemes> products,
                               const std::map<annotate::ThemeKey, std::string>& names) {
    std::sort(products.begin(), products.end(),
              [](const auto& a, const auto& b) { return a.run.product < b.run.product; });
    std::map<std::string, std::set<std::string>> by_name;
    for (auto& p : products) {
        for (auto& c : p.clusters) {
            auto it = names.find({p.run.product, c.cluster_id});
            if (it != names.end()) c.theme_name = it->second;
            if (c.theme_name && !c.theme_name->empty()) by_name[case_fold(*c.theme_name)].insert(p.run.product);
        }
    }
    ThemeReport r;
    r.products = std::move(products);
    for (auto& [name, prods] : by_name) r.rollup.push_back({name, {prods.begin(), prods.end()}});
    std::stable_sort(r.rollup.begin(), r.rollup.end(),
                     [](const RollupRow& a, const RollupRow& b) { return a.products.size() > b.products.size(); });
    return r;
}

nlohmann::json rollup_to_json(const ThemeReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rollup) {
        rows.push_back({{"theme", row.theme}, {"product_count", row.products.size()}, {"products", row.products}});
    }
    std::size_t clusters = 0;
    for (const auto& p : r.products) clusters += p.clusters.size();
    return {{"themes", rows}, {"product_total", r.products.size()}, {"cluster_total", clusters}};
}

std::string rollup_to_markdown(const ThemeReport& r) {
    std::string out = "| Theme | Number of Products | Products |\n|---|---:|---|\n";
    for (const auto& row : r.rollup) {
        out += "| " + row.theme + " | " + std::to_string(row.products.size()) + " | " + join(row.products, ", ") +
               " |\n";
    }
    return out;
}

}  // namespace vidreq::themes
