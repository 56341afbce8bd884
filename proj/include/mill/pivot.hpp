#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mill/lang.hpp"

namespace mill {

// Join key for the English side: NFC, trimmed, inner whitespace runs
// collapsed to single spaces. Case is preserved on purpose; folding could
// merge distinct sentences and fabricate alignments.
std::string normalize_key(std::string_view text);

// One English sentence and its translations; en never appears in the map.
struct MultiRecord {
  std::string en_key;
  std::map<Lang, std::string> translations;

  bool operator==(const MultiRecord&) const = default;
};

enum class CollisionPolicy { keep_first, drop_all };

struct CompileResult {
  std::vector<MultiRecord> records;  // sorted by en_key
  long collisions = 0;  // same key, same language, different translation
};

// Groups per-language (en, xx) pairs by normalized English key.
CompileResult compile_records(
    const std::map<Lang, std::vector<std::pair<std::string, std::string>>>&
        pairs_by_lang,
    CollisionPolicy policy = CollisionPolicy::keep_first);

// All (a, b) sentence pairs extractable from the records; either side may
// be en (the key). Throws on a == b.
std::vector<std::pair<std::string, std::string>> extract_bitext(
    const std::vector<MultiRecord>& records, Lang a, Lang b);

class GridCounts {
 public:
  void set(Lang a, Lang b, long count);
  long at(Lang a, Lang b) const;  // symmetric; (a, a) throws

  // TSV matrix with a language-code header row and column.
  std::string to_tsv() const;

 private:
  std::map<std::pair<Lang, Lang>, long> counts_;  // canonical (min, max) keys
};

GridCounts grid_counts(const std::vector<MultiRecord>& records);

}  // namespace mill
