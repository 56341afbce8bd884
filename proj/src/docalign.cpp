#include "mill/docalign.hpp"

#include <algorithm>
#include <cmath>

#include "mill/segment.hpp"

namespace mill {

TfIdfIndex build_index(const std::map<std::string, TokenList>& docs) {
  if (docs.empty()) throw DataError("build_index: no documents");
  TfIdfIndex index;
  index.doc_count = static_cast<long>(docs.size());

  std::map<std::string, long> df;
  for (const auto& [id, tokens] : docs) {
    std::map<std::string, long> seen;
    for (const std::string& t : tokens) ++seen[t];
    for (const auto& [t, _] : seen) ++df[t];
  }
  index.idf.reserve(df.size());
  for (const auto& [term, count] : df) {
    index.vocab.emplace(term, static_cast<int>(index.idf.size()));
    index.idf.push_back(
        std::log(static_cast<double>(index.doc_count) / (1.0 + count)) + 1.0);
  }

  for (const auto& [id, tokens] : docs) {
    std::map<int, double> weights;
    for (const std::string& t : tokens) weights[index.vocab.at(t)] += 1.0;
    double norm = 0.0;
    for (auto& [tid, w] : weights) {
      w *= index.idf[tid];
      norm += w * w;
    }
    norm = std::sqrt(norm);
    std::vector<std::pair<int, double>> vec;
    vec.reserve(weights.size());
    for (const auto& [tid, w] : weights)
      if (norm > 0.0) vec.emplace_back(tid, w / norm);
    index.vectors.emplace(id, std::move(vec));
  }
  return index;
}

double cosine(const TfIdfIndex& index, const std::string& a, const std::string& b) {
  auto ia = index.vectors.find(a);
  auto ib = index.vectors.find(b);
  if (ia == index.vectors.end()) throw DataError("cosine: unknown id " + a);
  if (ib == index.vectors.end()) throw DataError("cosine: unknown id " + b);
  const auto& va = ia->second;
  const auto& vb = ib->second;
  double dot = 0.0;
  size_t i = 0, j = 0;
  while (i < va.size() && j < vb.size()) {
    if (va[i].first < vb[j].first)
      ++i;
    else if (va[i].first > vb[j].first)
      ++j;
    else
      dot += va[i++].second * vb[j++].second;
  }
  return std::clamp(dot, 0.0, 1.0);
}

DocAlignResult align_documents(const ArticleCollection& src_articles,
                               const ArticleCollection& en_articles,
                               Translator& translator, const DocAlignConfig& cfg,
                               const SubwordModel* en_subword) {
  if (cfg.term_space == TermSpace::subword && !en_subword)
    throw DataError("align_documents: subword term space needs a model");

  auto tokenize = [&](const std::string& text) {
    return cfg.term_space == TermSpace::word ? word_tokenize(text)
                                             : subword_encode(*en_subword, text);
  };

  DocAlignResult result;

  // One shared term space over the English originals and the translations;
  // ids are prefixed per side so the two collections cannot collide.
  std::map<std::string, TokenList> docs;
  for (const auto& [id, article] : en_articles.all())
    docs.emplace("en:" + id, tokenize(article.body));

  std::map<std::string, std::string> translated;  // src id -> English text
  for (const auto& [id, article] : src_articles.all()) {
    std::string joined;
    long ok = 0;
    for (const std::string& sentence : split_sentences(article.body, article.lang)) {
      auto t = translator.translate(sentence, article.lang, Lang::en);
      if (!t) {
        ++result.skipped_sentences;
        continue;
      }
      if (!joined.empty()) joined.push_back(' ');
      joined += *t;
      ++ok;
    }
    if (ok == 0) {
      ++result.unmatched_sources;
      continue;
    }
    docs.emplace("src:" + id, tokenize(joined));
    translated.emplace(id, std::move(joined));
  }
  if (translated.empty() || en_articles.empty()) return result;

  TfIdfIndex index = build_index(docs);

  for (const auto& [src_id, _] : translated) {
    const Article& src = *src_articles.find(src_id);
    bool found = false;
    DocumentPair best;
    for (const auto& [en_id, en] : en_articles.all()) {
      long delta = days_between(src.date, en.date);
      if (std::labs(delta) > cfg.window_days) continue;
      double sim = cosine(index, "src:" + src_id, "en:" + en_id);
      if (sim < cfg.min_similarity) continue;
      bool better =
          !found || sim > best.similarity ||
          (sim == best.similarity &&
           (std::labs(delta) < std::labs(best.date_delta_days) ||
            (std::labs(delta) == std::labs(best.date_delta_days) &&
             en_id < best.tgt_id)));
      if (better) {
        best = DocumentPair{src_id, en_id, sim, delta};
        found = true;
      }
    }
    if (found) result.pairs.push_back(best);
    else ++result.unmatched_sources;
  }
  return result;
}

DateAlignResult align_by_date(const ArticleCollection& src_articles,
                              const ArticleCollection& tgt_articles) {
  std::map<Date, std::vector<const Article*>> src_by_date, tgt_by_date;
  for (const auto& [id, a] : src_articles.all()) src_by_date[a.date].push_back(&a);
  for (const auto& [id, a] : tgt_articles.all()) tgt_by_date[a.date].push_back(&a);

  DateAlignResult result;
  for (const auto& [date, srcs] : src_by_date) {
    auto it = tgt_by_date.find(date);
    if (it == tgt_by_date.end()) continue;
    const auto& tgts = it->second;
    if (srcs.size() == 1 && tgts.size() == 1) {
      result.pairs.push_back(
          DocumentPair{srcs[0]->id, tgts[0]->id, 1.0, 0});
    } else {
      result.ambiguous.push_back(DateAmbiguity{
          date, static_cast<long>(srcs.size()), static_cast<long>(tgts.size())});
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const DocumentPair& a, const DocumentPair& b) {
              return a.src_id < b.src_id;
            });
  return result;
}

}  // namespace mill
