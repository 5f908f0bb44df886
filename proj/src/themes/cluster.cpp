#include "vidreq/themes/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vidreq/core/error.hpp"
#include "vidreq/core/rng.hpp"

namespace vidreq::themes {

double squared_distance(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

namespace {

std::vector<Vector> seed_plus_plus(const std::vector<Vector>& points, int k, Rng& rng) {
    const std::size_t n = points.size();
    std::vector<Vector> centers;
    centers.push_back(points[rng.below(n)]);
    std::vector<double> d2(n, std::numeric_limits<double>::infinity());
    while (static_cast<int>(centers.size()) < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            d2[i] = std::min(d2[i], squared_distance(points[i], centers.back()));
            total += d2[i];
        }
        std::size_t pick = 0;
        if (total <= 0.0) {
            pick = rng.below(n);
        } else {
            double target = rng.uniform() * total;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                target -= d2[i];
                if (target < 0.0 && d2[i] > 0.0) {
                    pick = i;
                    break;
                }
            }
        }
        centers.push_back(points[pick]);
    }
    return centers;
}

struct Run {
    std::vector<int> assignment;
    std::vector<Vector> centers;
    double inertia = 0.0;
    int iterations = 0;
    std::vector<double> trace;
};

double assign(const std::vector<Vector>& points, const std::vector<Vector>& centers, std::vector<int>& assignment,
              std::vector<double>& dist) {
    double inertia = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        int best = 0;
        double best_d = squared_distance(points[i], centers[0]);
        for (std::size_t c = 1; c < centers.size(); ++c) {
            const double d = squared_distance(points[i], centers[c]);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(c);
            }
        }
        assignment[i] = best;
        dist[i] = best_d;
        inertia += best_d;
    }
    return inertia;
}

Run lloyd(const std::vector<Vector>& points, std::vector<Vector> centers, const KMeansOptions& opt) {
    const std::size_t n = points.size();
    const std::size_t k = centers.size();
    const std::size_t dim = points[0].size();
    Run r;
    r.assignment.assign(n, 0);
    std::vector<double> dist(n);
    r.inertia = assign(points, centers, r.assignment, dist);
    r.trace.push_back(r.inertia);

    for (r.iterations = 1; r.iterations <= opt.max_iterations; ++r.iterations) {
        std::vector<Vector> next(k, Vector(dim, 0.0));
        std::vector<std::size_t> count(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            auto& c = next[r.assignment[i]];
            for (std::size_t j = 0; j < dim; ++j) c[j] += points[i][j];
            ++count[r.assignment[i]];
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (count[c] == 0) continue;
            for (auto& x : next[c]) x /= static_cast<double>(count[c]);
        }
        // Reseed empty clusters from the worst-served points.
        for (std::size_t c = 0; c < k; ++c) {
            if (count[c] != 0) continue;
            std::size_t far = 0;
            for (std::size_t i = 1; i < n; ++i) {
                if (dist[i] > dist[far]) far = i;
            }
            next[c] = points[far];
            dist[far] = 0.0;
        }
        double shift = 0.0;
        for (std::size_t c = 0; c < k; ++c) shift = std::max(shift, std::sqrt(squared_distance(centers[c], next[c])));
        centers = std::move(next);
        r.inertia = assign(points, centers, r.assignment, dist);
        r.trace.push_back(r.inertia);
        if (shift < opt.tolerance) break;
    }
    r.iterations = std::min(r.iterations, opt.max_iterations);
    r.centers = std::move(centers);
    return r;
}

}  // namespace

KMeansResult kmeans(const std::vector<Vector>& points, int k, std::uint64_t seed, const KMeansOptions& options) {
    const auto n = points.size();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw Error(ErrorKind::KExceedsN, "k = " + std::to_string(k) + " with " + std::to_string(n) + " points");
    }
    Rng rng(seed);
    Run best;
    bool have = false;
    for (int restart = 0; restart < std::max(options.restarts, 1); ++restart) {
        auto run = lloyd(points, seed_plus_plus(points, k, rng), options);
        if (!have || run.inertia < best.inertia) {
            best = std::move(run);
            have = true;
        }
    }

    // Canonical labels: order of first appearance.
    std::vector<int> relabel(k, -1);
    int next_label = 0;
    for (int a : best.assignment) {
        if (relabel[a] < 0) relabel[a] = next_label++;
    }
    for (auto& r : relabel) {
        if (r < 0) r = next_label++;
    }
    KMeansResult out;
    out.assignment.reserve(n);
    for (int a : best.assignment) out.assignment.push_back(relabel[a]);
    out.centers.resize(k);
    for (int c = 0; c < k; ++c) out.centers[relabel[c]] = std::move(best.centers[c]);
    out.inertia = best.inertia;
    out.iterations = best.iterations;
    out.inertia_trace = std::move(best.trace);
    return out;
}

double silhouette(const std::vector<Vector>& points, const std::vector<int>& assignment) {
    const std::size_t n = points.size();
    if (assignment.size() != n) throw Error(ErrorKind::LengthMismatch, "assignment vs points");
    int k = 0;
    for (int a : assignment) k = std::max(k, a + 1);
    std::vector<std::size_t> size(k, 0);
    for (int a : assignment) ++size[a];
    const auto nonempty = std::count_if(size.begin(), size.end(), [](std::size_t s) { return s > 0; });
    if (nonempty < 2) throw Error(ErrorKind::SingleCluster, "silhouette needs two non-empty clusters");

    double total = 0.0;
    std::vector<double> sum(k);
    for (std::size_t i = 0; i < n; ++i) {
        if (size[assignment[i]] == 1) continue;
        std::fill(sum.begin(), sum.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) sum[assignment[j]] += std::sqrt(squared_distance(points[i], points[j]));
        }
        const int own = assignment[i];
        const double a = sum[own] / static_cast<double>(size[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
            if (c != own && size[c] > 0) b = std::min(b, sum[c] / static_cast<double>(size[c]));
        }
        const double m = std::max(a, b);
        if (m > 0.0) total += (b - a) / m;
    }
    return total / static_cast<double>(n);
}

ClusteringRun select_k(const EmbeddingMatrix& matrix, std::uint64_t seed, KRange range, const KMeansOptions& options) {
    const int n = static_cast<int>(matrix.vectors.size());
    if (n < 3) throw Error(ErrorKind::TooFewDocuments, std::to_string(n) + " documents");
    const int lo = std::max(range.min, 2);
    const int hi = std::min(range.max, n - 1);
    if (lo > hi) {
        throw Error(ErrorKind::TooFewDocuments,
                    std::to_string(n) + " documents leave no k in [" + std::to_string(range.min) + ", " +
                        std::to_string(range.max) + "]");
    }
    ClusteringRun run;
    run.seed = seed;
    double best = -std::numeric_limits<double>::infinity();
    for (int k = lo; k <= hi; ++k) {
        auto km = kmeans(matrix.vectors, k, seed, options);
        double s = -1.0;
        try {
            s = silhouette(matrix.vectors, km.assignment);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingleCluster) throw;
        }
        run.k_tried.push_back(k);
        run.silhouettes[k] = s;
        if (s > best) {
            best = s;
            run.chosen_k = k;
            run.assignment = std::move(km.assignment);
            run.inertia = km.inertia;
        }
    }
    return run;
}

nlohmann::json to_json(const ClusteringRun& run) {
    nlohmann::json sil = nlohmann::json::object();
    for (const auto& [k, s] : run.silhouettes) sil[std::to_string(k)] = s;
    return {
        {"product", run.product},
        {"k_tried", run.k_tried},
        {"silhouettes", sil},
        {"chosen_k", run.chosen_k},
        {"seed", run.seed},
        {"inertia", run.inertia},
    };
}

}  // namespace vidreq::themes
