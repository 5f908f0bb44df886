#include "vidreq/core/text.hpp"

#include <cstdint>

namespace vidreq {

namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one code point at `i`, advancing it. Returns kInvalid on a bad sequence.
char32_t decode(std::string_view s, std::size_t& i) {
    auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kInvalid;
    }
    if (i + len > s.size()) {
        ++i;
        return kInvalid;
    }
    for (int k = 1; k < len; ++k) {
        auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return kInvalid;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    i += len;
    return cp;
}

void encode(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_word_char(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9');
    }
    if (cp == kInvalid || cp < 0xC0) return false;  // Latin-1 punctuation and symbols
    if (cp == 0xD7 || cp == 0xF7) return false;
    if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // punctuation, arrows, math, shapes
    if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
    if (cp >= 0xFE00 && cp <= 0xFE0F) return false;  // variation selectors
    if (cp >= 0xFF00 && cp <= 0xFF0F) return false;  // fullwidth punctuation
    if (cp >= 0x1F000) return false;                 // emoji and pictographs
    return true;
}

bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

char32_t fold(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 32;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
    if (cp >= 0x100 && cp <= 0x17F) {
        // Latin Extended-A alternates upper/lower, with an odd-aligned run in the middle.
        bool odd_run = (cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E);
        if (odd_run) return (cp % 2 == 1) ? cp + 1 : cp;
        if (cp == 0x130 || cp == 0x138 || cp == 0x149 || cp == 0x17F) return cp;
        return (cp % 2 == 0) ? cp + 1 : cp;
    }
    if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 32;
    if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
    if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
    return cp;
}

}  // namespace

std::vector<std::string> word_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    bool pending_apostrophe = false;
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = decode(text, i);
        if (is_word_char(cp)) {
            if (pending_apostrophe) cur.push_back('\'');
            pending_apostrophe = false;
            encode(fold(cp), cur);
            continue;
        }
        if (is_apostrophe(cp) && !cur.empty() && !pending_apostrophe) {
            pending_apostrophe = true;
            continue;
        }
        pending_apostrophe = false;
        if (!cur.empty()) out.push_back(std::move(cur));
        cur.clear();
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::string case_fold(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t start = i;
        char32_t cp = decode(text, i);
        if (cp == kInvalid) {
            out.append(text.substr(start, i - start));
        } else {
            encode(fold(cp), out);
        }
    }
    return out;
}

bool is_lower_alpha(std::string_view word) {
    if (word.empty()) return false;
    for (char c : word) {
        if (c < 'a' || c > 'z') return false;
    }
    return true;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.append(sep);
        out.append(parts[i]);
    }
    return out;
}

}  // namespace vidreq
