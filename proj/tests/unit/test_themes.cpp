#include <doctest.h>

#include <cmath>
#include <functional>
#include <set>

#include "corpora.hpp"
#include "oracles.hpp"
#include "vidreq/core/error.hpp"
#include "vidreq/core/rng.hpp"
#include "vidreq/themes/cluster.hpp"
#include "vidreq/themes/embed.hpp"
#include "vidreq/themes/report.hpp"
#include "vidreq/themes/terms.hpp"

using namespace vidreq;
using namespace vidreq::themes;

namespace {

ErrorKind error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Io;
}

EmbeddingMatrix matrix(const std::vector<Vector>& pts) {
    EmbeddingMatrix m;
    for (std::size_t i = 0; i < pts.size(); ++i) m.record_ids.push_back("p" + std::to_string(100 + i));
    m.vectors = pts;
    m.d = pts.empty() ? 0 : pts[0].size();
    return m;
}

double cosine(const Vector& a, const Vector& b) {
    double ab = 0, aa = 0, bb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ab += a[i] * b[i];
        aa += a[i] * a[i];
        bb += b[i] * b[i];
    }
    return ab / std::sqrt(aa * bb);
}

}  // namespace

TEST_CASE("silhouette hand fixture") {
    const std::vector<Vector> pts{{0}, {1}, {10}, {11}};
    const std::vector<int> lab{0, 0, 1, 1};
    // s = (1 - 1/10.5 + 1 - 1/9.5) / 2 for each pair of mirrored points.
    const double hand = (2 - 1 / 10.5 - 1 / 9.5) / 2;
    CHECK(hand == doctest::Approx(0.8997).epsilon(1e-4));
    CHECK(silhouette(pts, lab) == doctest::Approx(hand).epsilon(1e-12));
    CHECK(oracle::silhouette(pts, lab) == doctest::Approx(hand).epsilon(1e-12));
}

TEST_CASE("silhouette agrees with the oracle and handles singletons") {
    Rng rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + rng.below(15);
        std::vector<Vector> pts(n, Vector(3));
        std::vector<int> lab(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (auto& x : pts[i]) x = rng.uniform() * 10;
            lab[i] = int(i < 2 ? i : rng.below(3));
        }
        CHECK(silhouette(pts, lab) == doctest::Approx(oracle::silhouette(pts, lab)).epsilon(1e-12));
    }
    CHECK(silhouette({{0}, {1}, {5}}, {0, 0, 1}) == doctest::Approx((1 - 1 / 5.0 + 1 - 1 / 4.0) / 3));
    CHECK(error_of([] { silhouette({{0}, {1}}, {0, 0}); }) == ErrorKind::SingleCluster);
    CHECK(error_of([] { silhouette({{0}, {1}}, {0}); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("kmeans reaches the brute-force optimum for k = 2") {
    Rng rng(4);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 4 + rng.below(7);
        std::vector<Vector> pts(n, Vector(2));
        for (auto& p : pts)
            for (auto& x : p) x = rng.uniform() * 10;
        const auto r = kmeans(pts, 2, 99 + trial);
        CHECK(r.inertia == doctest::Approx(oracle::best_two_partition_inertia(pts)).epsilon(1e-9));
    }
}

TEST_CASE("kmeans trace, labels and errors") {
    const auto pts = corpora::blobs(20, 4, 2.5, 12);
    const auto r = kmeans(pts, 3, 5);
    REQUIRE_FALSE(r.inertia_trace.empty());
    for (std::size_t i = 1; i < r.inertia_trace.size(); ++i) CHECK(r.inertia_trace[i] <= r.inertia_trace[i - 1] + 1e-9);
    CHECK(r.assignment[0] == 0);
    int seen = -1;
    for (int a : r.assignment) {
        CHECK(a <= seen + 1);
        seen = std::max(seen, a);
    }
    CHECK(kmeans(pts, 3, 5).assignment == r.assignment);
    CHECK(error_of([&] { kmeans(pts, 0, 1); }) == ErrorKind::KExceedsN);
    CHECK(error_of([&] { kmeans({{1.0}}, 2, 1); }) == ErrorKind::KExceedsN);
    const auto dup = kmeans({{1.0}, {1.0}, {1.0}}, 2, 1);
    CHECK(dup.inertia == 0.0);
}

TEST_CASE("select_k") {
    const auto run = select_k(matrix(corpora::blobs(15, 5, 0.5, 3)), 7);
    CHECK(run.chosen_k == 3);
    CHECK(run.k_tried == std::vector<int>{2, 3, 4, 5, 6});
    for (auto& [k, s] : run.silhouettes) CHECK(s <= run.silhouettes.at(3));

    const auto small = select_k(matrix({{0}, {1}, {10}, {11}}), 1);
    CHECK(small.k_tried == std::vector<int>{2, 3});
    CHECK(small.chosen_k == 2);

    CHECK(error_of([] { select_k(matrix({{0}, {1}}), 1); }) == ErrorKind::TooFewDocuments);
    const auto same = select_k(matrix({{1}, {1}, {1}, {1}}), 1);
    CHECK(same.silhouettes.at(2) == -1.0);
    CHECK(same.chosen_k == 2);
    CHECK(to_json(run)["chosen_k"] == 3);
}

TEST_CASE("class term scores fixture") {
    const std::map<int, std::vector<std::string>> c{{0, {"battery", "battery", "battery", "battery"}},
                                                    {1, {"screen", "screen", "screen", "screen"}}};
    const auto s = class_term_scores(c);
    REQUIRE(s.at(0).size() == 1);
    CHECK(s.at(0)[0].first == "battery");
    CHECK(std::abs(s.at(0)[0].second - 4 * std::log(3.0)) <= 1e-6);
    CHECK(class_term_table(c).at(1).at("battery") == 0.0);
}

TEST_CASE("class term scores follow the formula and ignore absent terms") {
    Rng rng(8);
    const std::vector<std::string> vocab{"app", "bug", "cam", "dock", "ear", "fan", "gps", "hdr"};
    for (int trial = 0; trial < 50; ++trial) {
        std::map<int, std::vector<std::string>> c;
        const int k = 2 + int(rng.below(3));
        for (int i = 0; i < k; ++i) {
            const std::size_t n = 1 + rng.below(12);
            for (std::size_t j = 0; j < n; ++j) c[i].push_back(vocab[rng.below(i == 0 ? 3 : vocab.size())]);
        }
        const auto table = class_term_table(c);
        for (auto& [id, row] : table) {
            std::set<std::string> present(c.at(id).begin(), c.at(id).end());
            for (auto& [t, v] : row) {
                if (!present.count(t)) CHECK(v == 0.0);
                CHECK(v == doctest::Approx(oracle::ctfidf(c, id, t)).epsilon(1e-12));
            }
        }
        const auto top = class_term_scores(c, 3);
        for (auto& [id, terms] : top) {
            CHECK(terms.size() <= 3);
            for (std::size_t i = 1; i < terms.size(); ++i) {
                const bool ordered = terms[i - 1].second > terms[i].second ||
                                     (terms[i - 1].second == terms[i].second && terms[i - 1].first < terms[i].first);
                CHECK(ordered);
            }
            for (auto& [t, v] : terms) CHECK(v > 0.0);
        }
    }
    CHECK(error_of([] { class_term_scores({}); }) == ErrorKind::EmptyCluster);
    CHECK(error_of([] { class_term_scores({{0, {"a"}}, {1, {}}}); }) == ErrorKind::EmptyCluster);
}

TEST_CASE("fallback embedding") {
    const auto m = embed_fallback({"battery drain fast", "screen bright outdoor", "battery drain slow", ""}, 7);
    CHECK(m.d == kFallbackDimension);
    CHECK(m.source == EmbeddingSource::Fallback);
    REQUIRE(m.vectors.size() == 4);
    for (int i = 0; i < 3; ++i) {
        double n = 0;
        for (double x : m.vectors[i]) n += x * x;
        CHECK(n == doctest::Approx(1.0));
    }
    for (double x : m.vectors[3]) CHECK(x == 0.0);
    CHECK(std::abs(cosine(m.vectors[0], m.vectors[1])) < 0.15);
    CHECK(cosine(m.vectors[0], m.vectors[2]) > 0.3);
    const auto again = embed_fallback({"battery drain fast", "screen bright outdoor", "battery drain slow", ""}, 7);
    CHECK(again.vectors == m.vectors);
    CHECK(error_of([] { embed_fallback({}, 1); }) == ErrorKind::EmptyCorpus);

    // Large vocabulary: disjoint documents stay close to orthogonal.
    std::vector<std::string> docs(2);
    for (int i = 0; i < 150; ++i) docs[i % 2] += " w" + std::to_string(i);
    const auto big = embed_fallback(docs, 3);
    CHECK(std::abs(cosine(big.vectors[0], big.vectors[1])) < 0.15);
}

TEST_CASE("theme clustering and rollup") {
    const std::vector<std::string> ids{"a", "b", "c", "d", "e", "f"};
    const std::vector<std::string> texts{"battery drains fast", "the battery drains", "battery drains overnight",
                                         "camera photos great", "the camera photos", "camera photos sharp"};
    const auto emb = embed_fallback(texts, 7);
    auto p = cluster_product("Pixel", ids, texts, emb, 7);
    CHECK(p.run.chosen_k == 2);
    CHECK(p.clusters[0].record_ids == std::vector<std::string>{"a", "b", "c"});
    REQUIRE_FALSE(p.clusters[0].top_terms.empty());
    for (auto& [t, v] : p.clusters[0].top_terms) CHECK(t != "the");

    const auto restored = product_themes_from_json(to_json(p));
    CHECK(restored.run.assignment == p.run.assignment);
    CHECK(restored.clusters.size() == p.clusters.size());

    auto q = p;
    q.run.product = "Firefox";
    for (auto& c : q.clusters) c.product = "Firefox";
    const std::map<annotate::ThemeKey, std::string> names{
        {{"Pixel", 0}, "Battery Life"}, {{"Firefox", 0}, "battery life"}, {{"Firefox", 1}, "Camera"}};
    const auto report = build_theme_report({p, q}, names);
    CHECK(report.products[0].run.product == "Firefox");
    REQUIRE(report.rollup.size() == 2);
    CHECK(report.rollup[0].theme == "battery life");
    CHECK(report.rollup[0].products == std::vector<std::string>{"Firefox", "Pixel"});
    CHECK(report.rollup[1].theme == "camera");
    const auto j = rollup_to_json(report);
    CHECK(j["product_total"] == 2);
    CHECK(j["themes"][0]["product_count"] == 2);
    CHECK(rollup_to_markdown(report).find("battery life") != std::string::npos);
}
