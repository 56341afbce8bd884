#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mill/lang.hpp"

namespace mill {

// One segmented sentence of an article. Indices are contiguous per article;
// text is trimmed and contains no newline.
struct SentenceRecord {
  std::string article_id;
  int index = 0;
  std::string text;

  bool operator==(const SentenceRecord&) const = default;
};

// Splits after language-specific terminator runs: danda/double danda plus
// `. ? !` for the Devanagari/Bengali/Gujarati/Oriya/Gurmukhi-script
// languages, the Urdu full stop plus `? !` for ur, and `. ? ! …` otherwise.
// The terminator stays attached to its sentence. Newlines always end a
// sentence (article bodies keep paragraph breaks from extraction).
std::vector<std::string> split_sentences(std::string_view text, Lang lang);

// Whitespace split with leading/trailing punctuation detached as separate
// tokens; everything else, digit runs included, stays intact.
std::vector<std::string> word_tokenize(std::string_view text);

}  // namespace mill
