#include "vidreq/relevance/model.hpp"

#include <cmath>
#include <deque>

#include "vidreq/core/error.hpp"

namespace vidreq::relevance {

namespace {

double sigmoid(double z) {
    if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// log(1 + exp(m)) without overflow.
double softplus(double m) { return m > 0 ? m + std::log1p(std::exp(-m)) : std::log1p(std::exp(m)); }

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Parameters are [w_0 .. w_{d-1}, b].
struct Objective {
    const std::vector<SparseVector>& x;
    const std::vector<double>& y;  // +1 / -1
    double l2;

    double operator()(const std::vector<double>& theta, std::vector<double>& grad) const {
        const std::size_t d = theta.size() - 1;
        grad.assign(theta.size(), 0.0);
        double f = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double z = theta[d];
            for (const auto& [j, v] : x[i]) z += theta[j] * v;
            f += softplus(-y[i] * z);
            const double dz = -y[i] * sigmoid(-y[i] * z);
            for (const auto& [j, v] : x[i]) grad[j] += dz * v;
            grad[d] += dz;
        }
        for (std::size_t j = 0; j < theta.size(); ++j) {
            f += 0.5 * l2 * theta[j] * theta[j];
            grad[j] += l2 * theta[j];
        }
        return f;
    }
};

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

struct LbfgsResult {
    std::vector<double> theta;
    int iterations = 0;
    double gradient_norm = 0.0;
};

LbfgsResult minimize(const Objective& obj, std::size_t dim, const TrainingOptions& opt) {
    constexpr std::size_t kHistory = 10;
    std::vector<double> theta(dim, 0.0), grad, next(dim), next_grad;
    double f = obj(theta, grad);
    std::deque<std::pair<std::vector<double>, std::vector<double>>> history;  // (s, y)

    int iter = 0;
    for (; iter < opt.max_iterations && max_abs(grad) >= opt.tolerance; ++iter) {
        // Two-loop recursion for the quasi-Newton direction.
        std::vector<double> q = grad;
        std::vector<double> alpha(history.size());
        for (std::size_t k = history.size(); k-- > 0;) {
            const auto& [s, yv] = history[k];
            alpha[k] = dot(s, q) / dot(yv, s);
            for (std::size_t j = 0; j < dim; ++j) q[j] -= alpha[k] * yv[j];
        }
        if (!history.empty()) {
            const auto& [s, yv] = history.back();
            const double gamma = dot(s, yv) / dot(yv, yv);
            for (auto& v : q) v *= gamma;
        } else {
            const double g = std::sqrt(dot(grad, grad));
            for (auto& v : q) v /= std::max(g, 1.0);
        }
        for (std::size_t k = 0; k < history.size(); ++k) {
            const auto& [s, yv] = history[k];
            const double beta = dot(yv, q) / dot(yv, s);
            for (std::size_t j = 0; j < dim; ++j) q[j] += s[j] * (alpha[k] - beta);
        }
        std::vector<double> dir(dim);
        for (std::size_t j = 0; j < dim; ++j) dir[j] = -q[j];
        double slope = dot(dir, grad);
        if (slope >= 0.0) {
            history.clear();
            for (std::size_t j = 0; j < dim; ++j) dir[j] = -grad[j];
            slope = -dot(grad, grad);
        }

        // Backtracking line search (Armijo).
        double step = 1.0;
        double f_next = 0.0;
        bool accepted = false;
        for (int tries = 0; tries < 60; ++tries) {
            for (std::size_t j = 0; j < dim; ++j) next[j] = theta[j] + step * dir[j];
            f_next = obj(next, next_grad);
            if (f_next <= f + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // no further decrease representable

        std::vector<double> s(dim), yv(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            s[j] = next[j] - theta[j];
            yv[j] = next_grad[j] - grad[j];
        }
        if (dot(s, yv) > 1e-12) {
            history.emplace_back(std::move(s), std::move(yv));
            if (history.size() > kHistory) history.pop_front();
        }
        theta.swap(next);
        grad.swap(next_grad);
        f = f_next;
    }
    return {std::move(theta), iter, max_abs(grad)};
}

}  // namespace

ReferenceModel ReferenceModel::train(const std::vector<LabeledExample>& train, std::uint64_t seed,
                                     const TrainingOptions& options) {
    bool has_rel = false, has_irr = false;
    for (const auto& e : train) (e.label == Label::Relevant ? has_rel : has_irr) = true;
    if (!has_rel || !has_irr) throw Error(ErrorKind::InsufficientClassData, "training data must contain both labels");

    ReferenceModel m;
    m.seed_ = seed;
    m.options_ = options;
    std::vector<std::string> docs;
    for (const auto& e : train) docs.push_back(e.text);
    m.features_.fit(docs, options.min_df);

    std::vector<SparseVector> x;
    std::vector<double> y;
    for (const auto& e : train) {
        x.push_back(m.features_.transform(e.text));
        y.push_back(e.label == Label::Relevant ? 1.0 : -1.0);
    }
    Objective obj{x, y, options.l2};
    auto result = minimize(obj, m.features_.dimension() + 1, options);
    m.bias_ = result.theta.back();
    result.theta.pop_back();
    m.weights_ = std::move(result.theta);
    m.iterations_ = result.iterations;
    m.gradient_norm_ = result.gradient_norm;
    return m;
}

double ReferenceModel::score(const std::string& text) const {
    double z = bias_;
    for (const auto& [j, v] : features_.transform(text)) z += weights_[j] * v;
    return sigmoid(z);
}

std::vector<double> ReferenceModel::score(const std::vector<std::string>& texts) const {
    std::vector<double> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(score(t));
    return out;
}

nlohmann::json ReferenceModel::to_json() const {
    return {
        {"model_id", kModelId},
        {"features", features_.to_json()},
        {"weights", weights_},
        {"bias", bias_},
        {"seed", seed_},
        {"iterations", iterations_},
        {"gradient_norm", gradient_norm_},
        {"options", {{"l2", options_.l2}, {"tolerance", options_.tolerance}, {"min_df", options_.min_df}}},
    };
}

ReferenceModel ReferenceModel::from_json(const nlohmann::json& j) {
    ReferenceModel m;
    try {
        m.features_ = TfidfVectorizer::from_json(j.at("features"));
        m.weights_ = j.at("weights").get<std::vector<double>>();
        m.bias_ = j.at("bias").get<double>();
        m.seed_ = j.value("seed", std::uint64_t{0});
        m.iterations_ = j.value("iterations", 0);
        m.gradient_norm_ = j.value("gradient_norm", 0.0);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedManifest, std::string("model: ") + e.what());
    }
    if (m.weights_.size() != m.features_.dimension()) {
        throw Error(ErrorKind::MalformedManifest, "model: weight count does not match vocabulary");
    }
    return m;
}

}  // namespace vidreq::relevance
