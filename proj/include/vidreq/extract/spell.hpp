#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vidreq::extract {

// Word -> corpus count language model for spelling correction. Words are
// lowercase a-z; every count is at least 1.
class FrequencyLexicon {
public:
    FrequencyLexicon();
    explicit FrequencyLexicon(std::unordered_map<std::string, std::uint64_t> counts);
    ~FrequencyLexicon();
    FrequencyLexicon(FrequencyLexicon&&) noexcept;
    FrequencyLexicon& operator=(FrequencyLexicon&&) noexcept;

    // Tab-separated "word<TAB>count" lines.
    static FrequencyLexicon load(const std::filesystem::path& path);
    // The lexicon shipped with the project (data/en_lexicon.tsv).
    static const FrequencyLexicon& bundled();

    std::uint64_t count(std::string_view word) const;
    bool contains(std::string_view word) const { return count(word) > 0; }
    std::uint64_t total() const { return total_; }
    std::size_t size() const { return counts_.size(); }
    const std::vector<std::string>& words() const { return words_; }  // sorted

    // Lexicon words within Damerau-Levenshtein distance 2 of `word`.
    std::vector<std::string> within_two_edits(std::string_view word) const;

private:
    struct DeleteIndex;
    const DeleteIndex& index() const;

    std::unordered_map<std::string, std::uint64_t> counts_;
    std::vector<std::string> words_;
    std::uint64_t total_ = 0;
    mutable std::unique_ptr<DeleteIndex> index_;
    mutable std::unique_ptr<std::once_flag> index_once_;
};

/// Noisy-channel correction of one lowercase alphabetic token: the word
/// itself if known, else the most frequent known word one edit away, else the
/// most frequent known word two edits away, else the word unchanged. Edits
/// are deletion, adjacent transposition, substitution and insertion over a-z;
/// equal counts resolve to the lexicographically smallest word. Tokens that
/// are not lowercase a-z come back unchanged.
std::string correct_spelling(std::string_view word, const FrequencyLexicon& lex);

// All strings one edit away from `word` (a-z alphabet).
std::vector<std::string> edits1(std::string_view word);

// Corrects every alphabetic word of an OCR line. Punctuation around a word is
// kept; a corrected word is emitted in lowercase, an unchanged one verbatim.
std::string correct_text(std::string_view text, const FrequencyLexicon& lex);

}  // namespace vidreq::extract
