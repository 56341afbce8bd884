#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mill/corpus_io.hpp"
#include "mill/lang.hpp"

namespace mill {

// Word-type counts over tokenized sentences; punctuation-only tokens are
// not vocabulary. Types are NFC-normalized and otherwise untouched.
struct Vocabulary {
  Lang lang = Lang::en;
  std::map<std::string, long> types;
  long token_total = 0;
};

Vocabulary build_vocab(const std::vector<std::string>& sentences, Lang lang);

// Percentage of test types missing from train, type-level (counts ignored).
// Throws DataError on an empty test vocabulary.
double oov_rate(const Vocabulary& train, const Vocabulary& test);

// Deterministic sample of n pairs for manual review: a Fisher-Yates prefix
// shuffle driven by std::mt19937_64 seeded with `seed`, bounded draws by
// rejection (see implementation). Returned in shuffle order together with
// each pair's index in the canonical input order.
std::vector<std::pair<long, OutputPair>> audit_sample(
    const std::vector<OutputPair>& pairs, long n, unsigned long long seed);

// Review TSV: `index<TAB>src<TAB>tgt<TAB>` with the verdict column blank.
void write_audit_tsv(const std::vector<std::pair<long, OutputPair>>& sample,
                     const std::filesystem::path& path);

struct AlignmentQuality {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Pair identity is (src article, src span, tgt article, tgt span).
struct GoldPair {
  std::string src_article;
  int src_first = 0, src_last = 0;
  std::string tgt_article;
  int tgt_first = 0, tgt_last = 0;

  auto operator<=>(const GoldPair&) const = default;
};

AlignmentQuality score_against_gold(const std::vector<GoldPair>& predicted,
                                    const std::vector<GoldPair>& gold);

// Per-language corpus figures; filtered <= aligned_to_en <= sentences.
struct LangStats {
  long articles = 0;
  long sentences = 0;
  long aligned_to_en = 0;
  long filtered = 0;
  long vocab_size = 0;
  std::optional<double> oov_rate;
};

struct CorpusReport {
  std::map<Lang, LangStats> per_lang;

  std::string to_text() const;   // aligned columns, one metric per row
  std::string to_jsonl() const;  // one record per language
};

}  // namespace mill
