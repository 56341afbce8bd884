#include "mill/stats.hpp"

#include <algorithm>
#include <set>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mill/script.hpp"
#include "mill/segment.hpp"
#include "mill/unicode_norm.hpp"
#include "mill/utf8.hpp"

namespace mill {

namespace {

bool punct_only(const std::string& token) {
  for (char32_t cp : utf8::decode(token))
    if (classify_char(cp) != Script::Punct) return false;
  return true;
}

// Uniform draw in [0, k) by rejection, so samples do not depend on any
// library's distribution internals, only on the standardized mt19937_64
// stream.
unsigned long long bounded(std::mt19937_64& rng, unsigned long long k) {
  unsigned long long limit = ~0ULL - ~0ULL % k;
  unsigned long long r;
  do {
    r = rng();
  } while (r >= limit);
  return r % k;
}

}  // namespace

Vocabulary build_vocab(const std::vector<std::string>& sentences, Lang lang) {
  Vocabulary vocab;
  vocab.lang = lang;
  for (const std::string& sentence : sentences) {
    for (std::string& token : word_tokenize(sentence)) {
      if (punct_only(token)) continue;
      ++vocab.types[nfc(token)];
      ++vocab.token_total;
    }
  }
  return vocab;
}

double oov_rate(const Vocabulary& train, const Vocabulary& test) {
  if (test.types.empty()) throw DataError("oov_rate: empty test vocabulary");
  long unseen = 0;
  for (const auto& [type, _] : test.types)
    if (!train.types.count(type)) ++unseen;
  return 100.0 * static_cast<double>(unseen) /
         static_cast<double>(test.types.size());
}

std::vector<std::pair<long, OutputPair>> audit_sample(
    const std::vector<OutputPair>& pairs, long n, unsigned long long seed) {
  if (n > static_cast<long>(pairs.size()))
    throw DataError("audit_sample: asked for " + std::to_string(n) + " of " +
                    std::to_string(pairs.size()) + " pairs");
  std::vector<long> order(pairs.size());
  std::iota(order.begin(), order.end(), 0L);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<long, OutputPair>> sample;
  sample.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    long j = i + static_cast<long>(bounded(rng, order.size() - i));
    std::swap(order[i], order[j]);
    sample.emplace_back(order[i], pairs[order[i]]);
  }
  return sample;
}

void write_audit_tsv(const std::vector<std::pair<long, OutputPair>>& sample,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write: " + path.string());
  for (const auto& [index, pair] : sample)
    out << index << '\t' << escape_field(pair.src_text) << '\t'
        << escape_field(pair.tgt_text) << '\t' << '\n';
}

AlignmentQuality score_against_gold(const std::vector<GoldPair>& predicted,
                                    const std::vector<GoldPair>& gold) {
  std::set<GoldPair> pred_set(predicted.begin(), predicted.end());
  std::set<GoldPair> gold_set(gold.begin(), gold.end());
  long hits = 0;
  for (const GoldPair& p : pred_set)
    if (gold_set.count(p)) ++hits;
  AlignmentQuality q;
  if (!pred_set.empty())
    q.precision = static_cast<double>(hits) / static_cast<double>(pred_set.size());
  if (!gold_set.empty())
    q.recall = static_cast<double>(hits) / static_cast<double>(gold_set.size());
  if (q.precision + q.recall > 0)
    q.f1 = 2 * q.precision * q.recall / (q.precision + q.recall);
  return q;
}

std::string CorpusReport::to_text() const {
  for (const auto& [lang, s] : per_lang) {
    if (s.filtered > s.aligned_to_en || s.aligned_to_en > s.sentences)
      throw std::logic_error("corpus report: filtered <= aligned <= sentences "
                             "violated for " + std::string(lang_code(lang)));
  }
  std::ostringstream out;
  auto row = [&](const std::string& label, auto value) {
    out << label;
    for (const auto& [lang, s] : per_lang) {
      std::ostringstream cell;
      cell << value(s);
      out << '\t' << cell.str();
    }
    out << '\n';
  };
  out << "metric";
  for (const auto& [lang, _] : per_lang) out << '\t' << lang_code(lang);
  out << '\n';
  row("articles", [](const LangStats& s) { return s.articles; });
  row("sentences", [](const LangStats& s) { return s.sentences; });
  row("aligned_en", [](const LangStats& s) { return s.aligned_to_en; });
  row("filtered", [](const LangStats& s) { return s.filtered; });
  row("vocabulary", [](const LangStats& s) { return s.vocab_size; });
  out << "oov_rate";
  for (const auto& [lang, s] : per_lang) {
    out << '\t';
    if (s.oov_rate) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f%%", *s.oov_rate);
      out << buf;
    } else {
      out << '-';
    }
  }
  out << '\n';
  return out.str();
}

std::string CorpusReport::to_jsonl() const {
  std::ostringstream out;
  for (const auto& [lang, s] : per_lang) {
    nlohmann::json j;
    j["lang"] = std::string(lang_code(lang));
    j["articles"] = s.articles;
    j["sentences"] = s.sentences;
    j["aligned_en"] = s.aligned_to_en;
    j["filtered"] = s.filtered;
    j["vocabulary"] = s.vocab_size;
    if (s.oov_rate) j["oov_rate"] = *s.oov_rate;
    out << j.dump() << '\n';
  }
  return out.str();
}

}  // namespace mill
