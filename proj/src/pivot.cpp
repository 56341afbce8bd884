#include "mill/pivot.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mill/unicode_norm.hpp"
#include "mill/utf8.hpp"

namespace mill {

namespace {

std::pair<Lang, Lang> ordered(Lang a, Lang b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

std::string normalize_key(std::string_view text) {
  std::string out;
  bool pending = false;
  for (char32_t cp : nfc(utf8::decode(text))) {
    if (utf8::is_space(cp)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    utf8::append(out, cp);
  }
  return out;
}

CompileResult compile_records(
    const std::map<Lang, std::vector<std::pair<std::string, std::string>>>&
        pairs_by_lang,
    CollisionPolicy policy) {
  CompileResult result;
  std::map<std::string, MultiRecord> by_key;
  std::set<std::pair<std::string, Lang>> collided;

  for (const auto& [lang, pairs] : pairs_by_lang) {
    if (lang == Lang::en) throw DataError("compile_records: en is the key side");
    for (const auto& [en_text, xx_text] : pairs) {
      std::string key = normalize_key(en_text);
      if (key.empty()) continue;
      MultiRecord& record = by_key[key];
      record.en_key = key;
      auto [it, inserted] = record.translations.emplace(lang, xx_text);
      if (!inserted && it->second != xx_text) {
        ++result.collisions;
        collided.insert({key, lang});
      }
    }
  }
  if (policy == CollisionPolicy::drop_all)
    for (const auto& [key, lang] : collided) by_key[key].translations.erase(lang);

  for (auto& [key, record] : by_key)
    if (!record.translations.empty())
      result.records.push_back(std::move(record));
  return result;
}

std::vector<std::pair<std::string, std::string>> extract_bitext(
    const std::vector<MultiRecord>& records, Lang a, Lang b) {
  if (a == b) throw DataError("extract_bitext: identical languages");
  std::vector<std::pair<std::string, std::string>> out;
  for (const MultiRecord& r : records) {
    const std::string* ta =
        a == Lang::en ? &r.en_key
                      : (r.translations.count(a) ? &r.translations.at(a) : nullptr);
    const std::string* tb =
        b == Lang::en ? &r.en_key
                      : (r.translations.count(b) ? &r.translations.at(b) : nullptr);
    if (ta && tb) out.emplace_back(*ta, *tb);
  }
  return out;
}

void GridCounts::set(Lang a, Lang b, long count) {
  if (a == b) throw DataError("grid: identical languages");
  counts_[ordered(a, b)] = count;
}

long GridCounts::at(Lang a, Lang b) const {
  if (a == b) throw DataError("grid: identical languages");
  auto it = counts_.find(ordered(a, b));
  return it == counts_.end() ? 0 : it->second;
}

std::string GridCounts::to_tsv() const {
  std::ostringstream out;
  for (Lang lang : kAllLangs) out << '\t' << lang_code(lang);
  out << '\n';
  for (Lang row : kAllLangs) {
    out << lang_code(row);
    for (Lang col : kAllLangs) {
      out << '\t';
      if (row == col)
        out << '-';
      else
        out << at(row, col);
    }
    out << '\n';
  }
  return out.str();
}

GridCounts grid_counts(const std::vector<MultiRecord>& records) {
  GridCounts grid;
  std::map<std::pair<Lang, Lang>, long> counts;
  for (size_t i = 0; i < kAllLangs.size(); ++i)
    for (size_t j = i + 1; j < kAllLangs.size(); ++j)
      counts[ordered(kAllLangs[i], kAllLangs[j])] = 0;
  for (const MultiRecord& r : records) {
    std::vector<Lang> langs{Lang::en};
    for (const auto& [lang, _] : r.translations) langs.push_back(lang);
    for (size_t i = 0; i < langs.size(); ++i)
      for (size_t j = i + 1; j < langs.size(); ++j)
        ++counts[ordered(langs[i], langs[j])];
  }
  for (const auto& [pair, count] : counts) grid.set(pair.first, pair.second, count);
  return grid;
}

}  // namespace mill
