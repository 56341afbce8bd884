#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mill {

// Data problems (bad records, unknown codes, malformed files). The CLI maps
// these to exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The closed language set. Everything else is rejected at parse time.
enum class Lang { en, hi, ta, te, ml, ur, bn, gu, mr, or_, pa };

constexpr std::array<Lang, 11> kAllLangs = {
    Lang::en, Lang::hi, Lang::ta, Lang::te, Lang::ml, Lang::ur,
    Lang::bn, Lang::gu, Lang::mr, Lang::or_, Lang::pa};

std::string_view lang_code(Lang lang);
Lang parse_lang(std::string_view code);  // throws DataError on unknown codes

}  // namespace mill
