#include "vidreq/themes/embed.hpp"

#include <cmath>

#include "vidreq/core/error.hpp"
#include "vidreq/core/rng.hpp"
#include "vidreq/relevance/tfidf.hpp"

namespace vidreq::themes {

std::string_view to_string(EmbeddingSource s) { return s == EmbeddingSource::External ? "external" : "fallback"; }

namespace {

double norm(const Vector& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Gram-Schmidt (modified) on Gaussian vectors; redraws a vector that comes
// out numerically dependent.
std::vector<Vector> orthonormal_gaussian(std::size_t count, std::size_t length, Rng& rng) {
    std::vector<Vector> out;
    out.reserve(count);
    while (out.size() < count) {
        Vector v(length);
        for (auto& x : v) x = rng.normal();
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : out) {
                double dot = 0.0;
                for (std::size_t i = 0; i < length; ++i) dot += u[i] * v[i];
                for (std::size_t i = 0; i < length; ++i) v[i] -= dot * u[i];
            }
        }
        const double n = norm(v);
        if (n < 1e-8) continue;
        for (auto& x : v) x /= n;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

EmbeddingMatrix embed_fallback(const std::vector<std::string>& texts, std::uint64_t seed) {
    if (texts.empty()) throw Error(ErrorKind::EmptyCorpus, "nothing to embed");
    relevance::TfidfVectorizer tfidf;
    tfidf.fit(texts, 1);
    const std::size_t vocab = tfidf.dimension();
    const std::size_t d = kFallbackDimension;

    // projection[t] is the 128-vector term t maps to.
    std::vector<Vector> projection(vocab, Vector(d, 0.0));
    Rng rng(seed);
    if (vocab <= d) {
        projection = orthonormal_gaussian(vocab, d, rng);
    } else {
        const auto columns = orthonormal_gaussian(d, vocab, rng);
        for (std::size_t t = 0; t < vocab; ++t) {
            for (std::size_t c = 0; c < d; ++c) projection[t][c] = columns[c][t];
        }
    }

    EmbeddingMatrix m;
    m.d = d;
    m.source = EmbeddingSource::Fallback;
    m.vectors.reserve(texts.size());
    for (const auto& text : texts) {
        Vector row(d, 0.0);
        for (const auto& [t, w] : tfidf.transform(text)) {
            for (std::size_t c = 0; c < d; ++c) row[c] += w * projection[t][c];
        }
        const double n = norm(row);
        if (n > 0.0) {
            for (auto& x : row) x /= n;
        }
        m.vectors.push_back(std::move(row));
    }
    return m;
}

HttpEmbedder::HttpEmbedder(const std::string& base_url, std::size_t batch_size)
    : endpoint_(parse_endpoint(base_url)), batch_size_(std::max<std::size_t>(batch_size, 1)) {
    check_health(endpoint_);
}

EmbeddingMatrix HttpEmbedder::embed(const std::vector<std::string>& texts) const {
    if (texts.empty()) throw Error(ErrorKind::EmptyCorpus, "nothing to embed");
    EmbeddingMatrix m;
    m.source = EmbeddingSource::External;
    for (std::size_t begin = 0; begin < texts.size(); begin += batch_size_) {
        const std::size_t end = std::min(texts.size(), begin + batch_size_);
        nlohmann::json body = {{"texts", std::vector<std::string>(texts.begin() + begin, texts.begin() + end)}};
        const auto reply = post_json(endpoint_, "/embed", body);
        if (!reply.is_object() || !reply.contains("vectors") || !reply["vectors"].is_array()) {
            throw Error(ErrorKind::ContractViolation, "embedder reply lacks a vectors array");
        }
        const auto& rows = reply["vectors"];
        if (rows.size() != end - begin) {
            throw Error(ErrorKind::ContractViolation, "embedder returned " + std::to_string(rows.size()) +
                                                          " vectors for " + std::to_string(end - begin) + " texts");
        }
        for (const auto& row : rows) {
            if (!row.is_array() || row.empty()) throw Error(ErrorKind::ContractViolation, "empty embedding row");
            if (m.d == 0) m.d = row.size();
            if (row.size() != m.d) throw Error(ErrorKind::ContractViolation, "embedding rows differ in length");
            Vector v;
            v.reserve(m.d);
            for (const auto& x : row) {
                if (!x.is_number()) throw Error(ErrorKind::ContractViolation, "non-numeric embedding value");
                const double val = x.get<double>();
                if (!std::isfinite(val)) throw Error(ErrorKind::ContractViolation, "non-finite embedding value");
                v.push_back(val);
            }
            m.vectors.push_back(std::move(v));
        }
    }
    return m;
}

}  // namespace vidreq::themes
