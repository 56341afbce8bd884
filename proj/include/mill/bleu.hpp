#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mill {

using TokenList = std::vector<std::string>;

// Clipped n-gram precision as an exact fraction.
struct Fraction {
  long matches = 0;
  long total = 0;
};

struct BleuScore {
  double value = 0.0;            // in [0,1]; CLI display multiplies by 100
  std::vector<Fraction> precisions;  // order 1..max_n; total 0 = undefined
  double brevity_penalty = 1.0;
  long hyp_len = 0;
  long ref_len = 0;
};

// Clipped matches / hypothesis n-gram count for one order. A hypothesis
// shorter than n yields (0, 0), i.e. the order is undefined and excluded
// from any composite.
Fraction modified_precision(const TokenList& hyp,
                            const std::vector<TokenList>& refs, int order);

// Papineni-style corpus BLEU: precisions are pooled over all pairs before
// combination, BP = 1 if hyp_len > ref_len else exp(1 - ref_len/hyp_len).
// Any pooled precision equal to zero annihilates the score.
BleuScore corpus_bleu(const std::vector<std::pair<TokenList, TokenList>>& pairs,
                      int max_n = 4);

// Sentence-level score used for alignment: add-one smoothing on orders >= 2,
// undefined orders dropped from the geometric mean, empty sides score 0.
double sentence_bleu(const TokenList& hyp, const TokenList& ref, int max_n = 2);

}  // namespace mill
