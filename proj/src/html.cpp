#include "mill/html.hpp"

#include <strings.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <set>

#include "mill/utf8.hpp"

namespace mill {

namespace {

bool is_block_tag(const std::string& name) {
  static const std::set<std::string> kBlock = {
      "address", "article", "aside",  "blockquote", "br",     "caption",
      "center",  "dd",      "div",    "dl",         "dt",     "fieldset",
      "figcaption", "figure", "footer", "form",     "h1",     "h2",
      "h3",      "h4",      "h5",     "h6",         "header", "hr",
      "li",      "main",    "nav",    "ol",         "p",      "pre",
      "section", "table",   "tbody",  "td",         "tfoot",  "th",
      "thead",   "title",   "tr",     "ul"};
  return kBlock.count(name) > 0;
}

std::string normalize_newlines(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r') {
      if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
      out.push_back('\n');
    } else {
      out.push_back(raw[i]);
    }
  }
  return out;
}

// Decodes one reference starting at s[i] (== '&'). Appends the replacement
// and returns the index past the reference, or returns i when it is not a
// well-formed reference (the caller then emits the '&' literally).
size_t decode_entity_at(std::string_view s, size_t i, std::string& out) {
  size_t j = i + 1;
  if (j < s.size() && s[j] == '#') {
    ++j;
    bool hex = j < s.size() && (s[j] == 'x' || s[j] == 'X');
    if (hex) ++j;
    char32_t cp = 0;
    size_t digits = 0;
    while (j < s.size() && digits < 8) {
      char c = s[j];
      int v;
      if (c >= '0' && c <= '9')
        v = c - '0';
      else if (hex && c >= 'a' && c <= 'f')
        v = c - 'a' + 10;
      else if (hex && c >= 'A' && c <= 'F')
        v = c - 'A' + 10;
      else
        break;
      cp = cp * (hex ? 16 : 10) + static_cast<char32_t>(v);
      ++j;
      ++digits;
    }
    if (digits == 0 || j >= s.size() || s[j] != ';') return i;
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    utf8::append(out, cp);
    return j + 1;
  }
  size_t start = j;
  while (j < s.size() && j - start < 32 &&
         std::isalnum(static_cast<unsigned char>(s[j])))
    ++j;
  if (j == start || j >= s.size() || s[j] != ';') return i;
  std::string name(s.substr(start, j - start));
  using entity_data::kEntities;
  using entity_data::kEntityCount;
  int lo = 0, hi = kEntityCount;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (std::strcmp(kEntities[mid].name, name.c_str()) < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < kEntityCount && name == kEntities[lo].name) {
    out += kEntities[lo].utf8;
    return j + 1;
  }
  return i;
}

// Scans a tag starting at s[i] (== '<'); returns index past the closing '>'
// (or npos if the tag never closes) and fills name/closing/self_closing.
size_t scan_tag(std::string_view s, size_t i, std::string& name, bool& closing,
                bool& self_closing) {
  size_t j = i + 1;
  closing = j < s.size() && s[j] == '/';
  if (closing) ++j;
  name.clear();
  while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j])))
    name.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(s[j++]))));
  char quote = 0;
  size_t last = j;
  while (j < s.size()) {
    char c = s[j];
    if (quote) {
      if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '>') {
      self_closing = last < j && s[j - 1] == '/';
      return j + 1;
    }
    last = j++;
  }
  return std::string_view::npos;
}

}  // namespace

std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '&') {
      size_t next = decode_entity_at(s, i, out);
      if (next != i) {
        i = next;
        continue;
      }
    }
    out.push_back(s[i++]);
  }
  return out;
}

std::string extract_text(std::string_view raw, bool is_html) {
  if (!is_html) return normalize_newlines(raw);

  std::string text;
  text.reserve(raw.size());
  size_t i = 0;
  while (i < raw.size()) {
    char c = raw[i];
    if (c == '<' && i + 1 < raw.size()) {
      char n = raw[i + 1];
      if (raw.compare(i, 4, "<!--") == 0) {
        size_t end = raw.find("-->", i + 4);
        i = end == std::string_view::npos ? raw.size() : end + 3;
        continue;
      }
      if (n == '!' || n == '?') {
        size_t end = raw.find('>', i);
        i = end == std::string_view::npos ? raw.size() : end + 1;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(n)) || n == '/') {
        std::string name;
        bool closing = false, self_closing = false;
        size_t end = scan_tag(raw, i, name, closing, self_closing);
        if (end == std::string_view::npos) {
          i = raw.size();
          continue;
        }
        if (is_block_tag(name)) text.push_back('\n');
        if (!closing && !self_closing && (name == "script" || name == "style")) {
          // Drop the element body; it is not article text.
          std::string close = "</" + name;
          size_t body_end = raw.size();
          for (size_t k = end; k + close.size() <= raw.size(); ++k) {
            if (strncasecmp(raw.data() + k, close.c_str(), close.size()) == 0) {
              size_t gt = raw.find('>', k);
              body_end = gt == std::string_view::npos ? raw.size() : gt + 1;
              break;
            }
          }
          i = body_end;
          continue;
        }
        i = end;
        continue;
      }
    }
    if (c == '&') {
      size_t next = decode_entity_at(raw, i, text);
      if (next != i) {
        i = next;
        continue;
      }
    }
    text.push_back(c);
    ++i;
  }

  // Tidy line structure: LF-normalized, lines trimmed, blank lines dropped.
  text = normalize_newlines(text);
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    size_t a = pos, b = eol;
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    if (b > a) {
      if (!out.empty()) out.push_back('\n');
      out.append(text, a, b - a);
    }
    pos = eol + 1;
  }
  return out;
}

}  // namespace mill
