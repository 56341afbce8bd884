#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mill/lang.hpp"

namespace mill {

// Greedy pair-merge (BPE) subword model. Words are whitespace-delimited and
// closed by a reserved end-of-word symbol; merges never cross words. The
// end-of-word symbol is U+2581; literal U+2581 and backslash in user text
// are backslash-escaped before symbolization, so decode(encode(x))
// round-trips any input up to whitespace normalization.
struct SubwordModel {
  Lang lang = Lang::en;
  int target_vocab = 4000;  // total symbol budget: base inventory + merges
  std::vector<std::pair<std::string, std::string>> merges;
  std::map<std::string, int> vocab;  // symbol -> id, insertion order of discovery

  bool operator==(const SubwordModel&) const = default;
};

inline constexpr std::string_view kWordEndSymbol = "\xe2\x96\x81";  // U+2581

// Learns merges most-frequent-first, ties to the lexicographically smaller
// pair. target_vocab must cover the distinct characters of the corpus.
SubwordModel train_subword(const std::vector<std::string>& sentences,
                           int target_vocab, Lang lang = Lang::en);

std::vector<std::string> subword_encode(const SubwordModel& model,
                                        std::string_view text);
std::string subword_decode(const std::vector<std::string>& symbols);

void save_subword(const SubwordModel& model, const std::filesystem::path& path);
SubwordModel load_subword(const std::filesystem::path& path);

}  // namespace mill
