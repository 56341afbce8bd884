#include "mill/script.hpp"

#include "mill/utf8.hpp"

namespace mill {

namespace {

constexpr std::array<std::string_view, kScriptCount> kScriptNames = {
    "Devanagari", "Bengali", "Gurmukhi", "Gujarati", "Oriya", "Tamil",
    "Telugu",     "Malayalam", "Arabic", "Latin",    "Digit", "Punct",
    "Other"};

bool is_alphabetic(Script s) {
  return s != Script::Digit && s != Script::Punct && s != Script::Other;
}

}  // namespace

std::string_view script_name(Script s) {
  return kScriptNames[static_cast<int>(s)];
}

Script parse_script(std::string_view name) {
  for (int i = 0; i < kScriptCount; ++i)
    if (kScriptNames[i] == name) return static_cast<Script>(i);
  throw DataError("unknown script name: " + std::string(name));
}

Script classify_char(char32_t cp) {
  using script_data::kRangeCount;
  using script_data::kRanges;
  int lo = 0, hi = kRangeCount;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (kRanges[mid].last < cp)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < kRangeCount && kRanges[lo].first <= cp && cp <= kRanges[lo].last)
    return kRanges[lo].script;
  return Script::Other;
}

ScriptProfile sentence_profile(std::string_view text) {
  std::array<long, kScriptCount> counts{};
  long total = 0;
  for (char32_t cp : utf8::decode(text)) {
    Script s = classify_char(cp);
    if (is_alphabetic(s)) {
      ++counts[static_cast<int>(s)];
      ++total;
    }
  }
  ScriptProfile profile;
  if (total == 0) return profile;
  long best = 0;
  bool tie = false;
  for (int i = 0; i < kScriptCount; ++i) {
    if (counts[i] == 0) continue;
    profile.fractions[static_cast<Script>(i)] =
        static_cast<double>(counts[i]) / static_cast<double>(total);
    if (counts[i] > best) {
      best = counts[i];
      profile.dominant = static_cast<Script>(i);
      tie = false;
    } else if (counts[i] == best) {
      tie = true;
    }
  }
  if (tie) profile.dominant = Script::Other;
  return profile;
}

double script_purity(std::string_view text, Lang lang) {
  Script want = expected_script(lang);
  long hits = 0, total = 0;
  for (char32_t cp : utf8::decode(text)) {
    Script s = classify_char(cp);
    if (!is_alphabetic(s)) continue;
    ++total;
    if (s == want) ++hits;
  }
  if (total == 0) return 1.0;
  return static_cast<double>(hits) / static_cast<double>(total);
}

Script expected_script(Lang lang) {
  switch (lang) {
    case Lang::en: return Script::Latin;
    case Lang::hi: return Script::Devanagari;
    case Lang::mr: return Script::Devanagari;
    case Lang::bn: return Script::Bengali;
    case Lang::pa: return Script::Gurmukhi;
    case Lang::gu: return Script::Gujarati;
    case Lang::or_: return Script::Oriya;
    case Lang::ta: return Script::Tamil;
    case Lang::te: return Script::Telugu;
    case Lang::ml: return Script::Malayalam;
    case Lang::ur: return Script::Arabic;
  }
  return Script::Other;
}

}  // namespace mill
