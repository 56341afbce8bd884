#include "mill/lang.hpp"

namespace mill {

std::string_view lang_code(Lang lang) {
  switch (lang) {
    case Lang::en: return "en";
    case Lang::hi: return "hi";
    case Lang::ta: return "ta";
    case Lang::te: return "te";
    case Lang::ml: return "ml";
    case Lang::ur: return "ur";
    case Lang::bn: return "bn";
    case Lang::gu: return "gu";
    case Lang::mr: return "mr";
    case Lang::or_: return "or";
    case Lang::pa: return "pa";
  }
  return "??";
}

Lang parse_lang(std::string_view code) {
  for (Lang lang : kAllLangs)
    if (lang_code(lang) == code) return lang;
  throw DataError("unknown language code: " + std::string(code));
}

}  // namespace mill
