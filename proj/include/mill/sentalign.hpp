#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mill/article.hpp"
#include "mill/bleu.hpp"
#include "mill/docalign.hpp"
#include "mill/translator.hpp"

namespace mill {

// Inclusive sentence-index range; merges keep spans short (1 or 2).
struct Span {
  int first = 0;
  int last = 0;

  int size() const { return last - first + 1; }
  auto operator<=>(const Span&) const = default;
};

struct SentencePair {
  Span src_span;
  Span tgt_span;
  double score = 0.0;
  Lang src_lang = Lang::en;
  Lang tgt_lang = Lang::en;
  std::string src_article;
  std::string tgt_article;
};

struct AlignConfig {
  double anchor_threshold = 0.1;
  int max_merge = 2;
  int bleu_max_n = 2;
};

// Token space used for alignment-time BLEU; defaults to word tokens, the
// pipeline plugs in subword encoding.
using Tokenizer = std::function<TokenList(const std::string&)>;
Tokenizer word_tokenizer();
Tokenizer subword_tokenizer(const SubwordModel& model);

// Source sentences with their cached translations; failures stay nullopt.
struct TranslatedDoc {
  std::vector<std::string> sentences;
  std::vector<std::optional<std::string>> translations;
  long failed = 0;
};

TranslatedDoc translate_doc(const std::vector<std::string>& sentences,
                            Translator& translator, Lang src, Lang tgt);

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> cells;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), cells(static_cast<size_t>(r) * c) {}
  double& at(int i, int j) { return cells[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return cells[static_cast<size_t>(i) * cols + j]; }
};

// Entry (i, j) is the sentence BLEU of the translated source sentence i
// against target sentence j; untranslatable rows are all zero.
Matrix score_matrix(const TranslatedDoc& src,
                    const std::vector<std::string>& tgt_sentences,
                    const AlignConfig& cfg, const Tokenizer& tokenize);

// Maximum-total-score strictly monotone one-to-one matching over cells with
// score >= threshold. Ties prefer fewer pairs, then the lexicographically
// smallest pair sequence. Exactly equivalent to exhaustive search over
// monotone matchings.
std::vector<std::pair<int, int>> anchor_align(const Matrix& scores,
                                              double threshold);

// Fills the regions between anchors with 1-1 pairs and 1-2/2-1 merges; a
// merge must beat both of its 1-1 constituents strictly. Leftovers are
// discarded. Anchors come back as 1-1 pairs; output is monotone and sorted.
struct RawPair {
  Span src_span;
  Span tgt_span;
  double score = 0.0;
};
std::vector<RawPair> gap_fill(const std::vector<std::pair<int, int>>& anchors,
                              const TranslatedDoc& src,
                              const std::vector<std::string>& tgt_sentences,
                              const Matrix& scores, const AlignConfig& cfg,
                              const Tokenizer& tokenize);

// Whole-document composition: segment, translate, anchor, fill.
std::vector<SentencePair> align_sentence_level(const DocumentPair& doc_pair,
                                               const Article& src_article,
                                               const Article& tgt_article,
                                               Translator& translator,
                                               const AlignConfig& cfg,
                                               const Tokenizer& tokenize,
                                               long* failed_sentences = nullptr);

// Space-joined text of a span, for resolving pairs to output text.
std::string join_span(const std::vector<std::string>& sentences, Span span);

}  // namespace mill
