#include "mill/subword.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "mill/utf8.hpp"

namespace mill {

namespace {

const char32_t kMarkerCp = 0x2581;

// Characters go to single-codepoint symbols, with the reserved marker and
// backslash escaped; the word is closed by the marker symbol.
std::vector<std::string> word_symbols(const std::vector<char32_t>& word) {
  std::vector<std::string> symbols;
  symbols.reserve(word.size() + 1);
  for (char32_t cp : word) {
    if (cp == kMarkerCp || cp == '\\') symbols.emplace_back("\\");
    symbols.push_back(utf8::encode({cp}));
  }
  symbols.emplace_back(kWordEndSymbol);
  return symbols;
}

std::vector<std::vector<char32_t>> split_words(std::string_view text) {
  std::vector<std::vector<char32_t>> words;
  std::vector<char32_t> cur;
  for (char32_t cp : utf8::decode(text)) {
    if (utf8::is_space(cp)) {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur = {};
    } else {
      cur.push_back(cp);
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

void apply_merge(std::vector<std::string>& symbols,
                 const std::pair<std::string, std::string>& merge) {
  size_t out = 0;
  for (size_t i = 0; i < symbols.size();) {
    if (i + 1 < symbols.size() && symbols[i] == merge.first &&
        symbols[i + 1] == merge.second) {
      symbols[out++] = merge.first + merge.second;
      i += 2;
    } else {
      if (out != i) symbols[out] = std::move(symbols[i]);
      ++out;
      ++i;
    }
  }
  symbols.resize(out);
}

}  // namespace

SubwordModel train_subword(const std::vector<std::string>& sentences,
                           int target_vocab, Lang lang) {
  // Unique words with frequencies; map order keeps training deterministic.
  std::map<std::string, long> word_freq;
  for (const std::string& sentence : sentences)
    for (const auto& word : split_words(sentence)) ++word_freq[utf8::encode(word)];
  if (word_freq.empty()) throw DataError("train_subword: empty corpus");

  struct Entry {
    std::vector<std::string> symbols;
    long freq;
  };
  std::vector<Entry> entries;
  std::set<std::string> base;
  for (const auto& [word, freq] : word_freq) {
    Entry e{word_symbols(utf8::decode(word)), freq};
    for (const auto& s : e.symbols) base.insert(s);
    entries.push_back(std::move(e));
  }

  // The character inventory excludes the marker; the budget covers both.
  int char_inventory = static_cast<int>(base.size()) - 1;
  if (target_vocab < char_inventory)
    throw DataError("train_subword: target_vocab " + std::to_string(target_vocab) +
                    " below character inventory " + std::to_string(char_inventory));

  SubwordModel model;
  model.lang = lang;
  model.target_vocab = target_vocab;
  for (const auto& s : base) model.vocab.emplace(s, static_cast<int>(model.vocab.size()));

  long budget = std::max(0L, static_cast<long>(target_vocab) -
                                 static_cast<long>(base.size()));
  for (long step = 0; step < budget; ++step) {
    std::map<std::pair<std::string, std::string>, long> pair_freq;
    for (const Entry& e : entries)
      for (size_t i = 0; i + 1 < e.symbols.size(); ++i)
        pair_freq[{e.symbols[i], e.symbols[i + 1]}] += e.freq;
    if (pair_freq.empty()) break;
    // Most frequent first; the map order resolves ties toward the
    // lexicographically smaller pair.
    std::pair<std::string, std::string> best;
    long best_freq = 0;
    for (const auto& [pair, freq] : pair_freq) {
      if (freq > best_freq) {
        best_freq = freq;
        best = pair;
      }
    }
    model.merges.push_back(best);
    model.vocab.emplace(best.first + best.second,
                        static_cast<int>(model.vocab.size()));
    for (Entry& e : entries) apply_merge(e.symbols, best);
  }
  return model;
}

std::vector<std::string> subword_encode(const SubwordModel& model,
                                        std::string_view text) {
  std::vector<std::string> out;
  for (const auto& word : split_words(text)) {
    std::vector<std::string> symbols = word_symbols(word);
    for (const auto& merge : model.merges) {
      if (symbols.size() < 2) break;
      apply_merge(symbols, merge);
    }
    out.insert(out.end(), symbols.begin(), symbols.end());
  }
  return out;
}

std::string subword_decode(const std::vector<std::string>& symbols) {
  std::string joined;
  for (const auto& s : symbols) joined += s;
  std::string text;
  std::vector<char32_t> cps = utf8::decode(joined);
  for (size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] == '\\' && i + 1 < cps.size()) {
      utf8::append(text, cps[++i]);
    } else if (cps[i] == kMarkerCp) {
      text.push_back(' ');
    } else {
      utf8::append(text, cps[i]);
    }
  }
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

void save_subword(const SubwordModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write subword model: " + path.string());
  out << "subword v1 " << lang_code(model.lang) << ' ' << model.target_vocab << '\n';
  for (const auto& [a, b] : model.merges) out << a << ' ' << b << '\n';
}

SubwordModel load_subword(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read subword model: " + path.string());
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string magic, version, lang;
  int target = 0;
  if (!(hs >> magic >> version >> lang >> target) || magic != "subword" ||
      version != "v1")
    throw DataError("bad subword model header: " + path.string());
  SubwordModel model;
  model.lang = parse_lang(lang);
  model.target_vocab = target;
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    size_t space = line.find(' ');
    if (space == std::string::npos || space == 0 || space + 1 >= line.size())
      throw DataError("bad merge at " + path.string() + ":" + std::to_string(lineno));
    model.merges.emplace_back(line.substr(0, space), line.substr(space + 1));
  }
  // The file stores merges only; rebuild the derivable part of the vocab.
  std::set<std::string> symbols;
  symbols.insert(std::string(kWordEndSymbol));
  for (const auto& [a, b] : model.merges) {
    symbols.insert(a);
    symbols.insert(b);
    symbols.insert(a + b);
  }
  for (const auto& s : symbols) model.vocab.emplace(s, static_cast<int>(model.vocab.size()));
  return model;
}

}  // namespace mill
