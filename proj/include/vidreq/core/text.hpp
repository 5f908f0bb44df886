#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vidreq {

/// Case-folded word tokens of UTF-8 text.
///
/// A word is a maximal run of letters and digits; an apostrophe between two
/// word characters stays inside the word ("don't"). Letters outside ASCII
/// count as word characters, punctuation and symbol blocks do not. Case
/// folding covers ASCII, Latin-1, Latin Extended-A, Greek and Cyrillic.
/// Invalid UTF-8 bytes are treated as separators.
///
/// This is the single definition of "word" used by the language filter,
/// classifier features, theme terms and content statistics.
std::vector<std::string> word_tokens(std::string_view text);

std::string case_fold(std::string_view text);

bool is_lower_alpha(std::string_view word);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace vidreq
