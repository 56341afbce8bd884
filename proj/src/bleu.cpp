#include "mill/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mill {

namespace {

// N-grams as '\x1f'-joined strings; real tokens never carry that byte.
std::map<std::string, long> ngram_counts(const TokenList& tokens, int order) {
  std::map<std::string, long> counts;
  if (static_cast<int>(tokens.size()) < order) return counts;
  for (size_t i = 0; i + order <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < order; ++k) {
      key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

double combine(const std::vector<Fraction>& precisions, double bp, bool smooth) {
  double log_sum = 0.0;
  int defined = 0;
  for (size_t n = 0; n < precisions.size(); ++n) {
    const Fraction& p = precisions[n];
    if (p.total == 0) continue;  // undefined order
    long matches = p.matches;
    long total = p.total;
    if (smooth && n >= 1) {
      ++matches;
      ++total;
    }
    if (matches == 0) return 0.0;
    log_sum += std::log(static_cast<double>(matches) / static_cast<double>(total));
    ++defined;
  }
  if (defined == 0) return 0.0;
  return bp * std::exp(log_sum / defined);
}

double brevity_penalty(long hyp_len, long ref_len) {
  if (hyp_len == 0) return 0.0;
  if (hyp_len > ref_len) return 1.0;
  return std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len));
}

}  // namespace

Fraction modified_precision(const TokenList& hyp,
                            const std::vector<TokenList>& refs, int order) {
  if (order < 1) throw std::invalid_argument("n-gram order must be >= 1");
  Fraction out;
  auto hyp_counts = ngram_counts(hyp, order);
  if (hyp_counts.empty()) return out;
  std::map<std::string, long> clip;
  for (const TokenList& ref : refs)
    for (const auto& [gram, count] : ngram_counts(ref, order)) {
      long& c = clip[gram];
      c = std::max(c, count);
    }
  for (const auto& [gram, count] : hyp_counts) {
    out.total += count;
    auto it = clip.find(gram);
    if (it != clip.end()) out.matches += std::min(count, it->second);
  }
  return out;
}

BleuScore corpus_bleu(const std::vector<std::pair<TokenList, TokenList>>& pairs,
                      int max_n) {
  if (pairs.empty()) throw std::invalid_argument("corpus_bleu: no pairs");
  BleuScore score;
  score.precisions.resize(max_n);
  for (const auto& [hyp, ref] : pairs) {
    score.hyp_len += static_cast<long>(hyp.size());
    score.ref_len += static_cast<long>(ref.size());
    for (int n = 1; n <= max_n; ++n) {
      Fraction f = modified_precision(hyp, {ref}, n);
      score.precisions[n - 1].matches += f.matches;
      score.precisions[n - 1].total += f.total;
    }
  }
  score.brevity_penalty = brevity_penalty(score.hyp_len, score.ref_len);
  score.value = combine(score.precisions, score.brevity_penalty, false);
  return score;
}

double sentence_bleu(const TokenList& hyp, const TokenList& ref, int max_n) {
  if (hyp.empty() || ref.empty()) return 0.0;
  std::vector<Fraction> precisions(max_n);
  for (int n = 1; n <= max_n; ++n)
    precisions[n - 1] = modified_precision(hyp, {ref}, n);
  double bp = brevity_penalty(static_cast<long>(hyp.size()),
                              static_cast<long>(ref.size()));
  return combine(precisions, bp, true);
}

}  // namespace mill
