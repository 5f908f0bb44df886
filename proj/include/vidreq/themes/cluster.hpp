#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "vidreq/themes/embed.hpp"

namespace vidreq::themes {

struct KMeansOptions {
    int restarts = 10;
    int max_iterations = 300;
    double tolerance = 1e-6;  // on the largest centre shift
};

struct KMeansResult {
    // Cluster ids are renumbered by first appearance in point order.
    std::vector<int> assignment;
    std::vector<Vector> centers;
    double inertia = 0.0;
    int iterations = 0;
    // Inertia after each assignment step of the winning restart.
    std::vector<double> inertia_trace;
};

// k-means++ seeding and Lloyd iterations, best of `restarts` by inertia.
// An emptied cluster takes over the point farthest from its centre.
// Throws KExceedsN unless 1 <= k <= n.
KMeansResult kmeans(const std::vector<Vector>& points, int k, std::uint64_t seed, const KMeansOptions& options = {});

double squared_distance(const Vector& a, const Vector& b);

// Mean silhouette with Euclidean distance; singleton clusters score 0.
// Throws SingleCluster when fewer than two clusters are non-empty.
double silhouette(const std::vector<Vector>& points, const std::vector<int>& assignment);

struct KRange {
    int min = 2;
    int max = 6;
};

struct ClusteringRun {
    std::string product;
    std::vector<int> k_tried;
    std::map<int, double> silhouettes;
    int chosen_k = 0;
    std::uint64_t seed = 0;
    std::vector<int> assignment;  // for chosen_k
    double inertia = 0.0;
};

// Tries every k in [range.min, min(range.max, n - 1)] and keeps the highest
// silhouette, the smaller k on ties. A k whose clustering leaves a single
// non-empty cluster scores -1. Throws TooFewDocuments when n < 3 or the
// range is empty.
ClusteringRun select_k(const EmbeddingMatrix& matrix, std::uint64_t seed, KRange range = {},
                       const KMeansOptions& options = {});

nlohmann::json to_json(const ClusteringRun& run);

}  // namespace vidreq::themes
