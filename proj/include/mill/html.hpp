#pragma once

#include <string>
#include <string_view>

namespace mill {

// Text extraction for ingested article files. With is_html set, markup is
// stripped best effort: tags removed, script/style/comment contents
// dropped, block-level tag boundaries turned into newlines and character
// references decoded. Without it, only line endings are normalized to LF.
// Never fails, and is idempotent on its own output.
std::string extract_text(std::string_view raw, bool is_html);

// Decodes `&name;`, `&#123;` and `&#x1F;` references; unknown ones are left
// untouched.
std::string decode_entities(std::string_view s);

namespace entity_data {

struct Entity {
  const char* name;   // without '&' and ';'
  const char* utf8;   // replacement text (may be more than one code point)
};

extern const Entity kEntities[];
extern const int kEntityCount;

}  // namespace entity_data
}  // namespace mill
