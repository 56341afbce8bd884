#pragma once

#include <map>
#include <string>
#include <vector>

#include "mill/article.hpp"
#include "mill/bleu.hpp"
#include "mill/subword.hpp"
#include "mill/translator.hpp"

namespace mill {

// TF-IDF index with unit-norm document vectors. Term ids are assigned in
// lexicographic term order; idf(t) = ln(N / (1 + df(t))) + 1.
struct TfIdfIndex {
  std::map<std::string, int> vocab;
  std::vector<double> idf;
  // Sparse vectors sorted by term id, L2-normalized (empty docs stay empty).
  std::map<std::string, std::vector<std::pair<int, double>>> vectors;
  long doc_count = 0;
};

TfIdfIndex build_index(const std::map<std::string, TokenList>& docs);

// Dot product of the stored unit vectors; throws DataError on unknown ids.
double cosine(const TfIdfIndex& index, const std::string& a, const std::string& b);

struct DocumentPair {
  std::string src_id;
  std::string tgt_id;
  double similarity = 0.0;
  long date_delta_days = 0;  // tgt date minus src date
};

enum class TermSpace { word, subword };

struct DocAlignConfig {
  int window_days = 2;          // inclusive, both directions
  double min_similarity = 0.1;  // drop sources whose best match scores below
  TermSpace term_space = TermSpace::subword;
};

struct DocAlignResult {
  std::vector<DocumentPair> pairs;     // sorted by src_id
  long skipped_sentences = 0;          // translator failures
  long unmatched_sources = 0;
};

// Translates every source article to English sentence by sentence, then
// picks the most cosine-similar English article posted within the date
// window. Ties go to the smaller |date delta|, then the smaller English id.
// English articles may be matched by several sources. The subword term
// space needs an English model for tokenizing both sides.
DocAlignResult align_documents(const ArticleCollection& src_articles,
                               const ArticleCollection& en_articles,
                               Translator& translator, const DocAlignConfig& cfg,
                               const SubwordModel* en_subword = nullptr);

struct DateAmbiguity {
  Date date;
  long src_count = 0;
  long tgt_count = 0;
};

struct DateAlignResult {
  std::vector<DocumentPair> pairs;
  std::vector<DateAmbiguity> ambiguous;
};

// Pairs articles sharing an exact posted date when that date carries exactly
// one article on each side; anything else lands in the ambiguity report.
DateAlignResult align_by_date(const ArticleCollection& src_articles,
                              const ArticleCollection& tgt_articles);

}  // namespace mill
