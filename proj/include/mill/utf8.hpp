#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mill::utf8 {

// Decodes UTF-8 into code points. Invalid byte sequences decode to U+FFFD,
// one replacement per bogus byte, so decoding never fails.
std::vector<char32_t> decode(std::string_view s);

std::string encode(const std::vector<char32_t>& cps);
void append(std::string& out, char32_t cp);

// Unicode whitespace (the White_Space set, without the rarely seen
// vertical-tab oddities nobody writes in articles).
bool is_space(char32_t cp);

}  // namespace mill::utf8
