#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vidreq::ingest {

inline constexpr double kStopwordRatioThreshold = 0.25;
inline constexpr std::size_t kMinLanguageTokens = 3;

class LanguageDetector {
public:
    virtual ~LanguageDetector() = default;
    // BCP-47 tag, or "und" when the text does not decide it.
    virtual std::string detect(std::string_view text) const = 0;
};

// Built-in heuristic: share of tokens found in a bundled stopword list.
// English wins whenever its ratio reaches the threshold; otherwise the best
// scoring bundled language at or above the threshold, else "und".
class StopwordDetector final : public LanguageDetector {
public:
    std::string detect(std::string_view text) const override;
};

// External detector: the command reads UTF-8 text on stdin and prints one
// tag on stdout. A nonzero exit is a BackendUnavailable error.
class ExecutableDetector final : public LanguageDetector {
public:
    explicit ExecutableDetector(std::vector<std::string> command) : command_(std::move(command)) {}
    std::string detect(std::string_view text) const override;

private:
    std::vector<std::string> command_;
};

// The speech backend's language takes precedence over the description text.
std::string detect_language(std::string_view text,
                            const std::optional<std::string>& transcript_language,
                            const LanguageDetector& detector);

std::string detect_language(std::string_view text, const std::optional<std::string>& transcript_language);

}  // namespace vidreq::ingest
