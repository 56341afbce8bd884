#include "mill/sentalign.hpp"

#include <algorithm>
#include <limits>

#include "mill/segment.hpp"

namespace mill {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr long kNoCount = std::numeric_limits<long>::max();

}  // namespace

Tokenizer word_tokenizer() {
  return [](const std::string& text) { return word_tokenize(text); };
}

Tokenizer subword_tokenizer(const SubwordModel& model) {
  return [&model](const std::string& text) { return subword_encode(model, text); };
}

TranslatedDoc translate_doc(const std::vector<std::string>& sentences,
                            Translator& translator, Lang src, Lang tgt) {
  TranslatedDoc doc;
  doc.sentences = sentences;
  doc.translations.reserve(sentences.size());
  for (const std::string& sentence : sentences) {
    auto t = translator.translate(sentence, src, tgt);
    if (!t) ++doc.failed;
    doc.translations.push_back(std::move(t));
  }
  return doc;
}

Matrix score_matrix(const TranslatedDoc& src,
                    const std::vector<std::string>& tgt_sentences,
                    const AlignConfig& cfg, const Tokenizer& tokenize) {
  Matrix m(static_cast<int>(src.sentences.size()),
           static_cast<int>(tgt_sentences.size()));
  std::vector<TokenList> tgt_tokens;
  tgt_tokens.reserve(tgt_sentences.size());
  for (const std::string& t : tgt_sentences) tgt_tokens.push_back(tokenize(t));
  for (int i = 0; i < m.rows; ++i) {
    if (!src.translations[i]) continue;  // row stays zero
    TokenList hyp = tokenize(*src.translations[i]);
    for (int j = 0; j < m.cols; ++j)
      m.at(i, j) = sentence_bleu(hyp, tgt_tokens[j], cfg.bleu_max_n);
  }
  return m;
}

// Suffix DP shared by anchor_align and gap_fill: best[i][j] is the maximum
// total over the rectangle starting at (i, j), count[i][j] the fewest pairs
// achieving it. Equality tests on doubles are exact because every candidate
// is reproduced as the same single addition of the same two values.
namespace {

struct SuffixTable {
  int rows, cols;
  std::vector<double> best;
  std::vector<long> count;

  SuffixTable(int r, int c)
      : rows(r), cols(c),
        best((r + 2) * static_cast<size_t>(c + 2), 0.0),
        count((r + 2) * static_cast<size_t>(c + 2), 0) {}
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * (cols + 2) + j; }
  double& b(int i, int j) { return best[idx(i, j)]; }
  long& k(int i, int j) { return count[idx(i, j)]; }
};

}  // namespace

std::vector<std::pair<int, int>> anchor_align(const Matrix& scores,
                                              double threshold) {
  const int m = scores.rows, n = scores.cols;
  SuffixTable t(m, n);
  auto eligible = [&](int i, int j) { return scores.at(i, j) >= threshold; };

  for (int i = m - 1; i >= 0; --i) {
    for (int j = n - 1; j >= 0; --j) {
      double best = std::max(t.b(i + 1, j), t.b(i, j + 1));
      if (eligible(i, j)) best = std::max(best, scores.at(i, j) + t.b(i + 1, j + 1));
      long count = kNoCount;
      if (t.b(i + 1, j) == best) count = std::min(count, t.k(i + 1, j));
      if (t.b(i, j + 1) == best) count = std::min(count, t.k(i, j + 1));
      if (eligible(i, j) && scores.at(i, j) + t.b(i + 1, j + 1) == best)
        count = std::min(count, t.k(i + 1, j + 1) + 1);
      t.b(i, j) = best;
      t.k(i, j) = count;
    }
  }

  // Forward reconstruction: repeatedly take the lexicographically smallest
  // pair that preserves both the total and the pair count. Emitting the
  // smallest valid pair first yields the lex-smallest optimal sequence.
  std::vector<std::pair<int, int>> out;
  int i = 0, j = 0;
  while (i < m && j < n && t.k(i, j) > 0) {
    bool found = false;
    for (int p = i; p < m && !found; ++p) {
      for (int q = j; q < n && !found; ++q) {
        if (!eligible(p, q)) continue;
        if (scores.at(p, q) + t.b(p + 1, q + 1) != t.b(i, j)) continue;
        if (t.k(p + 1, q + 1) + 1 != t.k(i, j)) continue;
        out.emplace_back(p, q);
        i = p + 1;
        j = q + 1;
        found = true;
      }
    }
    if (!found) break;  // unreachable: k > 0 guarantees a first pair
  }
  return out;
}

namespace {

// Candidate grouping inside a gap; spans are absolute sentence indices.
struct GapCandidate {
  Span src;
  Span tgt;
  double score;
};

std::optional<std::string> span_translation(const TranslatedDoc& src, Span span) {
  std::string joined;
  for (int i = span.first; i <= span.last; ++i) {
    if (!src.translations[i]) return std::nullopt;
    if (!joined.empty()) joined.push_back(' ');
    joined += *src.translations[i];
  }
  return joined;
}

// Monotone best-total selection over explicit candidates, same tie rules as
// anchor_align but on span quadruples. Gap regions are small, so the DP is
// indexed by gap-relative offsets.
std::vector<GapCandidate> pick_gap_pairs(const std::vector<GapCandidate>& cands,
                                         int src_lo, int src_n, int tgt_lo,
                                         int tgt_n) {
  SuffixTable t(src_n, tgt_n);
  // Candidates starting at (u, v), pre-bucketed.
  std::vector<std::vector<const GapCandidate*>> at(
      static_cast<size_t>(src_n) * tgt_n);
  for (const GapCandidate& c : cands)
    at[static_cast<size_t>(c.src.first - src_lo) * tgt_n + (c.tgt.first - tgt_lo)]
        .push_back(&c);

  for (int u = src_n - 1; u >= 0; --u) {
    for (int v = tgt_n - 1; v >= 0; --v) {
      double best = std::max(t.b(u + 1, v), t.b(u, v + 1));
      for (const GapCandidate* c : at[static_cast<size_t>(u) * tgt_n + v]) {
        int du = c->src.size(), dv = c->tgt.size();
        if (u + du <= src_n && v + dv <= tgt_n)
          best = std::max(best, c->score + t.b(u + du, v + dv));
      }
      long count = kNoCount;
      if (t.b(u + 1, v) == best) count = std::min(count, t.k(u + 1, v));
      if (t.b(u, v + 1) == best) count = std::min(count, t.k(u, v + 1));
      for (const GapCandidate* c : at[static_cast<size_t>(u) * tgt_n + v]) {
        int du = c->src.size(), dv = c->tgt.size();
        if (u + du <= src_n && v + dv <= tgt_n &&
            c->score + t.b(u + du, v + dv) == best)
          count = std::min(count, t.k(u + du, v + dv) + 1);
      }
      t.b(u, v) = best;
      t.k(u, v) = count;
    }
  }

  std::vector<GapCandidate> out;
  int u = 0, v = 0;
  while (u < src_n && v < tgt_n && t.k(u, v) > 0) {
    const GapCandidate* pick = nullptr;
    for (int p = u; p < src_n && !pick; ++p) {
      for (int q = v; q < tgt_n && !pick; ++q) {
        // Span-quadruple order: candidates at the same origin are compared
        // by (src.last, tgt.last), so 1-1 precedes 1-2 precedes 2-1.
        std::vector<const GapCandidate*> here =
            at[static_cast<size_t>(p) * tgt_n + q];
        std::sort(here.begin(), here.end(),
                  [](const GapCandidate* a, const GapCandidate* b) {
                    if (a->src.last != b->src.last) return a->src.last < b->src.last;
                    return a->tgt.last < b->tgt.last;
                  });
        for (const GapCandidate* c : here) {
          int du = c->src.size(), dv = c->tgt.size();
          if (p + du > src_n || q + dv > tgt_n) continue;
          if (c->score + t.b(p + du, q + dv) != t.b(u, v)) continue;
          if (t.k(p + du, q + dv) + 1 != t.k(u, v)) continue;
          pick = c;
          out.push_back(*c);
          u = p + du;
          v = q + dv;
          break;
        }
      }
    }
    if (!pick) break;
  }
  return out;
}

}  // namespace

std::vector<RawPair> gap_fill(const std::vector<std::pair<int, int>>& anchors,
                              const TranslatedDoc& src,
                              const std::vector<std::string>& tgt_sentences,
                              const Matrix& scores, const AlignConfig& cfg,
                              const Tokenizer& tokenize) {
  const int m = scores.rows, n = scores.cols;
  std::vector<TokenList> tgt_tokens(tgt_sentences.size());
  std::vector<TokenList> tgt_merged(n > 0 ? n - 1 : 0);  // [v] = tokens of v..v+1
  std::vector<TokenList> hyp_tokens(src.sentences.size());
  std::vector<TokenList> hyp_merged(m > 0 ? m - 1 : 0);  // [u] = tokens of u..u+1
  for (int v = 0; v < n; ++v) tgt_tokens[v] = tokenize(tgt_sentences[v]);
  for (int v = 0; v + 1 < n; ++v)
    tgt_merged[v] = tokenize(join_span(tgt_sentences, Span{v, v + 1}));
  for (int u = 0; u < m; ++u)
    if (src.translations[u]) hyp_tokens[u] = tokenize(*src.translations[u]);
  for (int u = 0; u + 1 < m; ++u)
    if (auto merged = span_translation(src, Span{u, u + 1}))
      hyp_merged[u] = tokenize(*merged);

  std::vector<RawPair> out;
  // Virtual anchors bracket the documents.
  std::vector<std::pair<int, int>> fence = anchors;
  fence.insert(fence.begin(), {-1, -1});
  fence.emplace_back(m, n);

  for (size_t a = 0; a + 1 < fence.size(); ++a) {
    if (a > 0) {
      auto [i, j] = fence[a];
      out.push_back(RawPair{Span{i, i}, Span{j, j}, scores.at(i, j)});
    }
    int src_lo = fence[a].first + 1, src_hi = fence[a + 1].first - 1;
    int tgt_lo = fence[a].second + 1, tgt_hi = fence[a + 1].second - 1;
    int src_n = src_hi - src_lo + 1, tgt_n = tgt_hi - tgt_lo + 1;
    if (src_n <= 0 || tgt_n <= 0) continue;

    std::vector<GapCandidate> cands;
    for (int u = src_lo; u <= src_hi; ++u) {
      for (int v = tgt_lo; v <= tgt_hi; ++v) {
        double s11 = scores.at(u, v);
        if (s11 >= cfg.anchor_threshold)
          cands.push_back(GapCandidate{Span{u, u}, Span{v, v}, s11});
        if (cfg.max_merge < 2) continue;
        // 1-2: one source sentence against two adjacent targets.
        if (v + 1 <= tgt_hi && src.translations[u]) {
          double s = sentence_bleu(hyp_tokens[u], tgt_merged[v], cfg.bleu_max_n);
          if (s >= cfg.anchor_threshold && s > s11 && s > scores.at(u, v + 1))
            cands.push_back(GapCandidate{Span{u, u}, Span{v, v + 1}, s});
        }
        // 2-1: two adjacent source sentences against one target.
        if (u + 1 <= src_hi && !hyp_merged[u].empty()) {
          double s = sentence_bleu(hyp_merged[u], tgt_tokens[v], cfg.bleu_max_n);
          if (s >= cfg.anchor_threshold && s > s11 && s > scores.at(u + 1, v))
            cands.push_back(GapCandidate{Span{u, u + 1}, Span{v, v}, s});
        }
      }
    }
    for (const GapCandidate& c :
         pick_gap_pairs(cands, src_lo, src_n, tgt_lo, tgt_n))
      out.push_back(RawPair{c.src, c.tgt, c.score});
  }
  std::sort(out.begin(), out.end(), [](const RawPair& a, const RawPair& b) {
    return a.src_span.first < b.src_span.first;
  });
  return out;
}

std::vector<SentencePair> align_sentence_level(const DocumentPair& doc_pair,
                                               const Article& src_article,
                                               const Article& tgt_article,
                                               Translator& translator,
                                               const AlignConfig& cfg,
                                               const Tokenizer& tokenize,
                                               long* failed_sentences) {
  std::vector<std::string> src_sentences =
      split_sentences(src_article.body, src_article.lang);
  std::vector<std::string> tgt_sentences =
      split_sentences(tgt_article.body, tgt_article.lang);

  std::vector<SentencePair> out;
  if (src_sentences.empty() || tgt_sentences.empty()) return out;

  TranslatedDoc src =
      translate_doc(src_sentences, translator, src_article.lang, tgt_article.lang);
  if (failed_sentences) *failed_sentences += src.failed;

  Matrix scores = score_matrix(src, tgt_sentences, cfg, tokenize);
  auto anchors = anchor_align(scores, cfg.anchor_threshold);
  for (const RawPair& r : gap_fill(anchors, src, tgt_sentences, scores, cfg, tokenize)) {
    SentencePair p;
    p.src_span = r.src_span;
    p.tgt_span = r.tgt_span;
    p.score = r.score;
    p.src_lang = src_article.lang;
    p.tgt_lang = tgt_article.lang;
    p.src_article = doc_pair.src_id;
    p.tgt_article = doc_pair.tgt_id;
    out.push_back(std::move(p));
  }
  return out;
}

std::string join_span(const std::vector<std::string>& sentences, Span span) {
  std::string joined;
  for (int i = span.first; i <= span.last; ++i) {
    if (!joined.empty()) joined.push_back(' ');
    joined += sentences[i];
  }
  return joined;
}

}  // namespace mill
