#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vidreq/core/http.hpp"

namespace vidreq::themes {

using Vector = std::vector<double>;

enum class EmbeddingSource { Fallback, External };

std::string_view to_string(EmbeddingSource s);

struct EmbeddingMatrix {
    std::vector<std::string> record_ids;
    std::vector<Vector> vectors;  // n rows of length d
    std::size_t d = 0;
    EmbeddingSource source = EmbeddingSource::Fallback;
};

inline constexpr std::size_t kFallbackDimension = 128;
inline constexpr const char* kEmbedderUrlEnv = "VIDREQ_EMBEDDER_URL";

// TF-IDF rows (every term kept) times a seeded projection to 128 columns,
// then L2-normalized. The projection has orthonormal rows when the vocabulary
// has at most 128 terms, so orthogonal documents stay exactly orthogonal,
// and orthonormal columns otherwise. A document without word tokens maps to
// the zero vector. Throws EmptyCorpus for no texts.
EmbeddingMatrix embed_fallback(const std::vector<std::string>& texts, std::uint64_t seed);

// POST /embed {texts} -> {vectors}. The constructor runs the health check.
class HttpEmbedder {
public:
    explicit HttpEmbedder(const std::string& base_url, std::size_t batch_size = 64);

    // Throws ContractViolation on a wrong row count, ragged or empty rows, or
    // non-finite values.
    EmbeddingMatrix embed(const std::vector<std::string>& texts) const;

private:
    Endpoint endpoint_;
    std::size_t batch_size_;
};

}  // namespace vidreq::themes
