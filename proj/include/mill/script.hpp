#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "mill/lang.hpp"

namespace mill {

enum class Script {
  Devanagari,
  Bengali,
  Gurmukhi,
  Gujarati,
  Oriya,
  Tamil,
  Telugu,
  Malayalam,
  Arabic,
  Latin,
  Digit,
  Punct,
  Other,
};

constexpr int kScriptCount = 13;

std::string_view script_name(Script s);
Script parse_script(std::string_view name);  // throws DataError on unknown

// Total over all code points; anything outside the range table is Other.
// The table is data/script_ranges.tsv, compiled into the library; the two
// must match byte for byte.
Script classify_char(char32_t cp);

// Per-script fractions over alphabetic characters only (Digit/Punct/Other
// never count toward the denominator). With no alphabetic characters the
// fractions are empty and dominant is Other; argmax ties also go to Other.
struct ScriptProfile {
  std::map<Script, double> fractions;
  Script dominant = Script::Other;
};

ScriptProfile sentence_profile(std::string_view text);

// Fraction of alphabetic characters written in the script expected for
// `lang`; 1 when there are no alphabetic characters at all.
double script_purity(std::string_view text, Lang lang);

Script expected_script(Lang lang);

namespace script_data {

struct ScriptRange {
  char32_t first;
  char32_t last;
  Script script;
};

extern const ScriptRange kRanges[];
extern const int kRangeCount;

}  // namespace script_data
}  // namespace mill
