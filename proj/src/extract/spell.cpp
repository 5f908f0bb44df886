#include "vidreq/extract/spell.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "vidreq/core/error.hpp"
#include "vidreq/core/text.hpp"

namespace vidreq::extract {

namespace {

constexpr std::string_view kAlphabet = "abcdefghijklmnopqrstuvwxyz";

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Strings obtained from `word` by removing at most two characters.
std::set<std::string> deletes_upto_two(std::string_view word) {
    std::set<std::string> out;
    out.emplace(word);
    for (std::size_t i = 0; i < word.size(); ++i) {
        std::string d1 = std::string(word.substr(0, i)) + std::string(word.substr(i + 1));
        for (std::size_t j = 0; j < d1.size(); ++j) {
            out.insert(d1.substr(0, j) + d1.substr(j + 1));
        }
        out.insert(std::move(d1));
    }
    return out;
}

// Unrestricted Damerau-Levenshtein distance (Lowrance-Wagner) over a-z.
int damerau_levenshtein(std::string_view a, std::string_view b) {
    const int la = static_cast<int>(a.size());
    const int lb = static_cast<int>(b.size());
    const int inf = la + lb;
    std::vector<int> d(static_cast<std::size_t>(la + 2) * (lb + 2));
    auto at = [&](int i, int j) -> int& { return d[static_cast<std::size_t>(i) * (lb + 2) + j]; };
    at(0, 0) = inf;
    for (int i = 0; i <= la; ++i) {
        at(i + 1, 0) = inf;
        at(i + 1, 1) = i;
    }
    for (int j = 0; j <= lb; ++j) {
        at(0, j + 1) = inf;
        at(1, j + 1) = j;
    }
    int last_row[26] = {0};
    for (int i = 1; i <= la; ++i) {
        int last_match_col = 0;
        for (int j = 1; j <= lb; ++j) {
            const int i1 = last_row[b[j - 1] - 'a'];
            const int j1 = last_match_col;
            const int cost = a[i - 1] == b[j - 1] ? 0 : 1;
            if (cost == 0) last_match_col = j;
            at(i + 1, j + 1) = std::min({at(i, j) + cost, at(i + 1, j) + 1, at(i, j + 1) + 1,
                                         at(i1, j1) + (i - i1 - 1) + 1 + (j - j1 - 1)});
        }
        last_row[a[i - 1] - 'a'] = i;
    }
    return at(la + 1, lb + 1);
}

// Highest count wins; equal counts go to the lexicographically smaller word.
bool better(const FrequencyLexicon& lex, const std::string& a, const std::string& b) {
    const auto ca = lex.count(a);
    const auto cb = lex.count(b);
    return ca != cb ? ca > cb : a < b;
}

}  // namespace

struct FrequencyLexicon::DeleteIndex {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;  // (hash of a delete form, word id)
};

FrequencyLexicon::FrequencyLexicon() : index_once_(std::make_unique<std::once_flag>()) {}

FrequencyLexicon::FrequencyLexicon(std::unordered_map<std::string, std::uint64_t> counts)
    : counts_(std::move(counts)), index_once_(std::make_unique<std::once_flag>()) {
    for (const auto& [w, c] : counts_) {
        if (!is_lower_alpha(w)) throw Error(ErrorKind::MalformedManifest, "lexicon word '" + w + "' is not lowercase a-z");
        if (c < 1) throw Error(ErrorKind::MalformedManifest, "lexicon count for '" + w + "' must be >= 1");
        words_.push_back(w);
        total_ += c;
    }
    std::sort(words_.begin(), words_.end());
}

FrequencyLexicon::~FrequencyLexicon() = default;
FrequencyLexicon::FrequencyLexicon(FrequencyLexicon&&) noexcept = default;
FrequencyLexicon& FrequencyLexicon::operator=(FrequencyLexicon&&) noexcept = default;

FrequencyLexicon FrequencyLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MissingInput, "lexicon " + path.string());
    std::unordered_map<std::string, std::uint64_t> counts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw Error(ErrorKind::MalformedManifest, "lexicon line without tab: " + line);
        counts[line.substr(0, tab)] += std::stoull(line.substr(tab + 1));
    }
    return FrequencyLexicon(std::move(counts));
}

const FrequencyLexicon& FrequencyLexicon::bundled() {
    static const FrequencyLexicon lex = [] {
        const char* env = std::getenv("VIDREQ_LEXICON");
        return load(env != nullptr && *env != '\0' ? std::filesystem::path(env)
                                                    : std::filesystem::path(VIDREQ_DEFAULT_LEXICON));
    }();
    return lex;
}

std::uint64_t FrequencyLexicon::count(std::string_view word) const {
    auto it = counts_.find(std::string(word));
    return it == counts_.end() ? 0 : it->second;
}

const FrequencyLexicon::DeleteIndex& FrequencyLexicon::index() const {
    std::call_once(*index_once_, [this] {
        auto idx = std::make_unique<DeleteIndex>();
        for (std::uint32_t id = 0; id < words_.size(); ++id) {
            for (const auto& d : deletes_upto_two(words_[id])) idx->entries.emplace_back(fnv1a(d), id);
        }
        std::sort(idx->entries.begin(), idx->entries.end());
        index_ = std::move(idx);
    });
    return *index_;
}

std::vector<std::string> FrequencyLexicon::within_two_edits(std::string_view word) const {
    const auto& entries = index().entries;
    std::vector<std::uint32_t> ids;
    for (const auto& d : deletes_upto_two(word)) {
        const std::uint64_t h = fnv1a(d);
        auto lo = std::lower_bound(entries.begin(), entries.end(), std::make_pair(h, std::uint32_t{0}));
        for (auto it = lo; it != entries.end() && it->first == h; ++it) ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<std::string> out;
    for (auto id : ids) {
        const std::string& w = words_[id];
        const auto len_gap = static_cast<long>(w.size()) - static_cast<long>(word.size());
        if (len_gap > 2 || len_gap < -2) continue;
        if (damerau_levenshtein(word, w) <= 2) out.push_back(w);
    }
    return out;
}

std::vector<std::string> edits1(std::string_view word) {
    std::vector<std::string> out;
    const std::size_t n = word.size();
    out.reserve(54 * n + 25);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::string(word.substr(0, i)) + std::string(word.substr(i + 1)));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::string t(word);
        std::swap(t[i], t[i + 1]);
        out.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (char c : kAlphabet) {
            std::string t(word);
            t[i] = c;
            out.push_back(std::move(t));
        }
    }
    for (std::size_t i = 0; i <= n; ++i) {
        for (char c : kAlphabet) {
            std::string t(word);
            t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), c);
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::string correct_spelling(std::string_view word, const FrequencyLexicon& lex) {
    if (!is_lower_alpha(word) || lex.contains(word)) return std::string(word);

    std::string best;
    for (auto& cand : edits1(word)) {
        if (lex.contains(cand) && (best.empty() || better(lex, cand, best))) best = std::move(cand);
    }
    if (!best.empty()) return best;

    for (auto& cand : lex.within_two_edits(word)) {
        if (best.empty() || better(lex, cand, best)) best = std::move(cand);
    }
    return best.empty() ? std::string(word) : best;
}

std::string correct_text(std::string_view text, const FrequencyLexicon& lex) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> out;
    std::string word;
    auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    while (in >> word) {
        std::size_t b = 0;
        std::size_t e = word.size();
        while (b < e && !is_alpha(word[b])) ++b;
        while (e > b && !is_alpha(word[e - 1])) --e;
        std::string core = word.substr(b, e - b);
        std::string lower;
        for (char c : core) lower.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c));
        if (is_lower_alpha(lower)) {
            std::string fixed = correct_spelling(lower, lex);
            if (fixed != lower) word = word.substr(0, b) + fixed + word.substr(e);
        }
        out.push_back(std::move(word));
    }
    return join(out, " ");
}

}  // namespace vidreq::extract
