#include "mill/segment.hpp"

#include "mill/script.hpp"
#include "mill/utf8.hpp"

namespace mill {

namespace {

bool is_terminator(char32_t cp, Lang lang) {
  switch (lang) {
    case Lang::hi:
    case Lang::mr:
    case Lang::bn:
    case Lang::gu:
    case Lang::or_:
    case Lang::pa:
      return cp == 0x0964 || cp == 0x0965 || cp == '.' || cp == '?' || cp == '!';
    case Lang::ur:
      return cp == 0x06D4 || cp == '?' || cp == '!';
    case Lang::en:
    case Lang::ta:
    case Lang::te:
    case Lang::ml:
      return cp == '.' || cp == '?' || cp == '!' || cp == 0x2026;
  }
  return false;
}

void flush(std::vector<char32_t>& cur, std::vector<std::string>& out) {
  size_t a = 0, b = cur.size();
  while (a < b && utf8::is_space(cur[a])) ++a;
  while (b > a && utf8::is_space(cur[b - 1])) --b;
  if (b > a)
    out.push_back(utf8::encode(std::vector<char32_t>(cur.begin() + a, cur.begin() + b)));
  cur.clear();
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text, Lang lang) {
  std::vector<std::string> out;
  std::vector<char32_t> cps = utf8::decode(text);
  std::vector<char32_t> cur;
  size_t i = 0;
  while (i < cps.size()) {
    char32_t cp = cps[i];
    if (cp == '\n') {
      flush(cur, out);
      ++i;
      continue;
    }
    cur.push_back(cp);
    if (is_terminator(cp, lang)) {
      // Consume the whole terminator run so "..." or "?!" stays together.
      while (i + 1 < cps.size() && is_terminator(cps[i + 1], lang))
        cur.push_back(cps[++i]);
      flush(cur, out);
    }
    ++i;
  }
  flush(cur, out);
  return out;
}

std::vector<std::string> word_tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::vector<char32_t> cps = utf8::decode(text);
  size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && utf8::is_space(cps[i])) ++i;
    size_t start = i;
    while (i < cps.size() && !utf8::is_space(cps[i])) ++i;
    if (i == start) continue;
    size_t a = start, b = i;
    while (a < b && classify_char(cps[a]) == Script::Punct) {
      tokens.push_back(utf8::encode({cps[a]}));
      ++a;
    }
    // Trailing punctuation is detached in original order, after the core.
    size_t tail = b;
    while (tail > a && classify_char(cps[tail - 1]) == Script::Punct) --tail;
    if (tail > a)
      tokens.push_back(utf8::encode(std::vector<char32_t>(cps.begin() + a, cps.begin() + tail)));
    for (size_t k = tail; k < b; ++k) tokens.push_back(utf8::encode({cps[k]}));
  }
  return tokens;
}

}  // namespace mill
