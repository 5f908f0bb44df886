#include "vidreq/ingest/language.hpp"

#include "vidreq/core/error.hpp"
#include "vidreq/core/process.hpp"
#include "vidreq/core/stopwords.hpp"
#include "vidreq/core/text.hpp"

namespace vidreq::ingest {

std::string StopwordDetector::detect(std::string_view text) const {
    const auto tokens = word_tokens(text);
    if (tokens.size() < kMinLanguageTokens) return "und";

    std::string best = "und";
    double best_ratio = 0.0;
    for (const auto& profile : stopword_profiles()) {
        std::size_t hits = 0;
        for (const auto& t : tokens) hits += profile.words->count(t);
        const double ratio = static_cast<double>(hits) / static_cast<double>(tokens.size());
        if (ratio < kStopwordRatioThreshold) continue;
        if (profile.tag == "en") return "en";
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best = std::string(profile.tag);
        }
    }
    return best;
}

std::string ExecutableDetector::detect(std::string_view text) const {
    ProcessResult r = run_process(command_, text);
    if (r.exit_code != 0) {
        throw Error(ErrorKind::BackendUnavailable, "language detector exited with " + std::to_string(r.exit_code));
    }
    std::string tag = r.out;
    while (!tag.empty() && (tag.back() == '\n' || tag.back() == '\r' || tag.back() == ' ')) tag.pop_back();
    while (!tag.empty() && tag.front() == ' ') tag.erase(tag.begin());
    return tag.empty() ? "und" : tag;
}

std::string detect_language(std::string_view text, const std::optional<std::string>& transcript_language,
                            const LanguageDetector& detector) {
    if (transcript_language && !transcript_language->empty()) return *transcript_language;
    return detector.detect(text);
}

std::string detect_language(std::string_view text, const std::optional<std::string>& transcript_language) {
    static const StopwordDetector heuristic;
    return detect_language(text, transcript_language, heuristic);
}

}  // namespace vidreq::ingest
