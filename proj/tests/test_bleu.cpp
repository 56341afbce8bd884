#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "mill/bleu.hpp"
#include "oracles.hpp"

using namespace mill;

namespace {

TokenList random_tokens(std::mt19937& rng, int max_len, int vocab) {
  TokenList tokens;
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i)
    tokens.push_back("w" + std::to_string(rng() % vocab));
  return tokens;
}

}  // namespace

TEST_CASE("clipping: seven 'the' against 'the cat sat'") {
  TokenList hyp(7, "the");
  Fraction p = modified_precision(hyp, {{"the", "cat", "sat"}}, 1);
  CHECK(p.matches == 1);
  CHECK(p.total == 7);
}

TEST_CASE("identical hyp and ref hit precision 1 at every order") {
  TokenList s = {"a", "b", "c", "d"};
  for (int n = 1; n <= 4; ++n) {
    Fraction p = modified_precision(s, {s}, n);
    CHECK(p.matches == p.total);
    CHECK(p.total == static_cast<long>(s.size()) - n + 1);
  }
}

TEST_CASE("disjoint vocabulary scores zero") {
  Fraction p = modified_precision({"a", "b"}, {{"x", "y"}}, 1);
  CHECK(p.matches == 0);
  CHECK(p.total == 2);
}

TEST_CASE("hypothesis shorter than the order is undefined") {
  Fraction p = modified_precision({"a"}, {{"a", "b"}}, 2);
  CHECK(p.matches == 0);
  CHECK(p.total == 0);
}

TEST_CASE("multi-reference clip takes the max across references") {
  TokenList hyp = {"the", "the"};
  Fraction p = modified_precision(hyp, {{"the"}, {"the", "the"}}, 1);
  CHECK(p.matches == 2);
}

TEST_CASE("corpus_bleu on identical pairs is exactly 1") {
  std::vector<std::pair<TokenList, TokenList>> pairs = {
      {{"a", "b", "c"}, {"a", "b", "c"}},
      {{"d", "e", "f", "g"}, {"d", "e", "f", "g"}}};
  BleuScore score = corpus_bleu(pairs);
  CHECK(score.value == 1.0);
  CHECK(score.brevity_penalty == 1.0);
}

TEST_CASE("brevity penalty for a half-length hypothesis") {
  // Perfect unigrams, max_n 1, hypothesis half as long as the reference.
  std::vector<std::pair<TokenList, TokenList>> pairs = {
      {{"a", "b"}, {"a", "b", "a", "b"}}};
  BleuScore score = corpus_bleu(pairs, 1);
  CHECK(score.brevity_penalty == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(score.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("any zero pooled precision annihilates corpus BLEU") {
  std::vector<std::pair<TokenList, TokenList>> pairs = {
      {{"a", "b", "c"}, {"a", "c", "b"}}};  // unigrams fine, no bigram matches
  BleuScore score = corpus_bleu(pairs, 2);
  CHECK(score.value == 0.0);
  CHECK(score.precisions[1].matches == 0);
}

TEST_CASE("corpus_bleu rejects empty input") {
  CHECK_THROWS(corpus_bleu({}));
}

TEST_CASE("sentence_bleu spec points") {
  TokenList five = {"a", "b", "c", "d", "e"};
  CHECK(sentence_bleu(five, five, 2) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(sentence_bleu({}, {"a"}) == 0.0);
  CHECK(sentence_bleu({"a"}, {}) == 0.0);

  // 4 tokens, 2 unigram matches, 0 bigram: sqrt(0.5 * 1/4).
  TokenList hyp = {"a", "b", "x", "y"};
  TokenList ref = {"a", "c", "b", "d"};
  CHECK(sentence_bleu(hyp, ref, 2) ==
        doctest::Approx(std::sqrt(0.5 * 0.25)).epsilon(1e-12));
}

TEST_CASE("unigram precision ignores hypothesis order") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    TokenList hyp = random_tokens(rng, 10, 4);
    TokenList ref = random_tokens(rng, 10, 4);
    TokenList shuffled = hyp;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Fraction a = modified_precision(hyp, {ref}, 1);
    Fraction b = modified_precision(shuffled, {ref}, 1);
    CHECK(a.matches == b.matches);
    CHECK(a.total == b.total);
  }
}

TEST_CASE("agreement with the brute-force oracle") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    TokenList hyp = random_tokens(rng, 12, 3);  // tiny vocab forces clipping
    TokenList ref = random_tokens(rng, 12, 3);
    for (int n = 1; n <= 4; ++n) {
      Fraction ours = modified_precision(hyp, {ref}, n);
      Fraction brute = oracles::brute_precision(hyp, ref, n);
      CHECK(ours.matches == brute.matches);
      CHECK(ours.total == brute.total);
    }
    CHECK(sentence_bleu(hyp, ref, 2) ==
          doctest::Approx(oracles::brute_sentence_bleu(hyp, ref, 2)).epsilon(1e-9));
    if (!hyp.empty() || !ref.empty()) {
      std::vector<std::pair<TokenList, TokenList>> pairs = {{hyp, ref}};
      CHECK(corpus_bleu(pairs, 4).value ==
            doctest::Approx(oracles::brute_corpus_bleu(pairs, 4)).epsilon(1e-9));
    }
  }
}

TEST_CASE("scores stay inside [0,1]") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    TokenList hyp = random_tokens(rng, 8, 3);
    TokenList ref = random_tokens(rng, 8, 3);
    double s = sentence_bleu(hyp, ref);
    CHECK(s >= 0.0);
    CHECK(s <= 1.0);
  }
}
