#pragma once

// Brute-force reference implementations used as oracles. Everything here is
// deliberately naive and independent of the library code paths it checks.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "mill/bleu.hpp"
#include "mill/sentalign.hpp"

namespace oracles {

inline std::map<std::vector<std::string>, long> brute_ngrams(
    const mill::TokenList& tokens, int n) {
  std::map<std::vector<std::string>, long> counts;
  for (int i = 0; i + n <= static_cast<int>(tokens.size()); ++i)
    ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
  return counts;
}

inline mill::Fraction brute_precision(const mill::TokenList& hyp,
                                      const mill::TokenList& ref, int n) {
  mill::Fraction f;
  auto hyp_counts = brute_ngrams(hyp, n);
  auto ref_counts = brute_ngrams(ref, n);
  for (const auto& [gram, count] : hyp_counts) {
    f.total += count;
    auto it = ref_counts.find(gram);
    if (it != ref_counts.end()) f.matches += std::min(count, it->second);
  }
  return f;
}

inline double brute_corpus_bleu(
    const std::vector<std::pair<mill::TokenList, mill::TokenList>>& pairs,
    int max_n) {
  long hyp_len = 0, ref_len = 0;
  std::vector<mill::Fraction> pooled(max_n);
  for (const auto& [hyp, ref] : pairs) {
    hyp_len += static_cast<long>(hyp.size());
    ref_len += static_cast<long>(ref.size());
    for (int n = 1; n <= max_n; ++n) {
      mill::Fraction f = brute_precision(hyp, ref, n);
      pooled[n - 1].matches += f.matches;
      pooled[n - 1].total += f.total;
    }
  }
  double bp = hyp_len == 0 ? 0.0
              : hyp_len > ref_len
                  ? 1.0
                  : std::exp(1.0 - static_cast<double>(ref_len) / hyp_len);
  double log_sum = 0.0;
  int defined = 0;
  for (const mill::Fraction& f : pooled) {
    if (f.total == 0) continue;
    if (f.matches == 0) return 0.0;
    log_sum += std::log(static_cast<double>(f.matches) / f.total);
    ++defined;
  }
  if (defined == 0) return 0.0;
  return bp * std::exp(log_sum / defined);
}

inline double brute_sentence_bleu(const mill::TokenList& hyp,
                                  const mill::TokenList& ref, int max_n) {
  if (hyp.empty() || ref.empty()) return 0.0;
  double bp = hyp.size() > ref.size()
                  ? 1.0
                  : std::exp(1.0 - static_cast<double>(ref.size()) / hyp.size());
  double log_sum = 0.0;
  int defined = 0;
  for (int n = 1; n <= max_n; ++n) {
    mill::Fraction f = brute_precision(hyp, ref, n);
    if (f.total == 0) continue;
    double m = f.matches, t = f.total;
    if (n >= 2) {
      m += 1;
      t += 1;
    }
    if (m == 0) return 0.0;
    log_sum += std::log(m / t);
    ++defined;
  }
  if (defined == 0) return 0.0;
  return bp * std::exp(log_sum / defined);
}

// Exhaustive search over all monotone one-to-one matchings of cells at or
// above the threshold, under the same tie rules the DP promises: maximum
// total, then fewest pairs, then the lexicographically smallest sequence.
struct BruteBest {
  double score = 0.0;
  std::vector<std::pair<int, int>> pairs;
  bool init = false;
};

inline void brute_recurse(const mill::Matrix& m, double threshold, int i, int j,
                          double score, std::vector<std::pair<int, int>>& current,
                          BruteBest& best) {
  if (!best.init || score > best.score ||
      (score == best.score && (current.size() < best.pairs.size() ||
                               (current.size() == best.pairs.size() &&
                                current < best.pairs)))) {
    best = BruteBest{score, current, true};
  }
  for (int p = i; p < m.rows; ++p) {
    for (int q = j; q < m.cols; ++q) {
      if (m.at(p, q) < threshold) continue;
      current.emplace_back(p, q);
      brute_recurse(m, threshold, p + 1, q + 1, score + m.at(p, q), current, best);
      current.pop_back();
    }
  }
}

inline std::vector<std::pair<int, int>> brute_anchor(const mill::Matrix& m,
                                                     double threshold) {
  BruteBest best;
  std::vector<std::pair<int, int>> current;
  brute_recurse(m, threshold, 0, 0, 0.0, current, best);
  return best.pairs;
}

}  // namespace oracles
