#include <doctest.h>

#include <random>

#include "mill/subword.hpp"
#include "testutil.hpp"

using namespace mill;

namespace {

// Whitespace-normalized random string over a small alphabet.
std::string random_text(std::mt19937& rng, const std::vector<std::string>& alphabet) {
  std::string text;
  int words = 1 + static_cast<int>(rng() % 6);
  for (int w = 0; w < words; ++w) {
    if (w) text += ' ';
    int chars = 1 + static_cast<int>(rng() % 8);
    for (int c = 0; c < chars; ++c) text += alphabet[rng() % alphabet.size()];
  }
  return text;
}

}  // namespace

TEST_CASE("first merge on the toy corpus is (a,a)") {
  SubwordModel model = train_subword({"aa aa ab"}, 4);
  REQUIRE(model.merges.size() == 1);  // target 4 = 3 base symbols + 1 merge
  CHECK(model.merges[0] == std::pair<std::string, std::string>{"a", "a"});
}

TEST_CASE("single-character corpus learns zero merges") {
  SubwordModel model = train_subword({"x"}, 1);
  CHECK(model.merges.empty());
}

TEST_CASE("budget below the character inventory is an error") {
  CHECK_THROWS_AS(train_subword({"abc"}, 2), DataError);
}

TEST_CASE("training is deterministic") {
  std::vector<std::string> corpus = {"the cat sat", "the mat", "a cat"};
  testutil::TempDir tmp("subword");
  SubwordModel a = train_subword(corpus, 30);
  SubwordModel b = train_subword(corpus, 30);
  CHECK(a == b);
  save_subword(a, tmp / "a.model");
  save_subword(b, tmp / "b.model");
  CHECK(testutil::read_file(tmp / "a.model") == testutil::read_file(tmp / "b.model"));
}

TEST_CASE("encode/decode round trips") {
  SubwordModel model = train_subword({"aa ab ba"}, 8);
  CHECK(subword_decode(subword_encode(model, "aa ab")) == "aa ab");
  CHECK(subword_encode(model, "").empty());

  // Characters unseen at training fall back to single-char symbols.
  auto symbols = subword_encode(model, "aq");
  CHECK(subword_decode(symbols) == "aq");

  // Round trip normalizes whitespace runs.
  CHECK(subword_decode(subword_encode(model, "  aa \t ab  ")) == "aa ab");
}

TEST_CASE("reserved marker and backslash in user text survive the trip") {
  SubwordModel model = train_subword({"ab ba"}, 8);
  for (const char* tricky : {"a▁b", "a\\b", "\\", "▁", "a \\▁ b"})
    CHECK(subword_decode(subword_encode(model, tricky)) == tricky);
}

TEST_CASE("random round trips over the training alphabet") {
  std::vector<std::string> corpus;
  std::mt19937 rng(99);
  std::vector<std::string> alphabet = {"a", "b", "c", "d", "क", "ख"};
  for (int i = 0; i < 50; ++i) corpus.push_back(random_text(rng, alphabet));
  SubwordModel model = train_subword(corpus, 120);
  for (int i = 0; i < 500; ++i) {
    std::string text = random_text(rng, alphabet);
    CHECK(subword_decode(subword_encode(model, text)) == text);
  }
}

TEST_CASE("vocabulary bound holds") {
  std::vector<std::string> corpus;
  std::mt19937 rng(123);
  std::vector<std::string> alphabet = {"a", "b", "c", "d", "e", "f", "g"};
  for (int i = 0; i < 80; ++i) corpus.push_back(random_text(rng, alphabet));
  for (int target : {8, 16, 64, 256}) {
    SubwordModel model = train_subword(corpus, target);
    CHECK(static_cast<int>(model.vocab.size()) <=
          target + static_cast<int>(alphabet.size()));
    CHECK(static_cast<long>(model.merges.size()) <= target);
  }
}

TEST_CASE("more merges never lengthen the training corpus encoding") {
  std::vector<std::string> corpus;
  std::mt19937 rng(5);
  std::vector<std::string> alphabet = {"a", "b", "c"};
  for (int i = 0; i < 40; ++i) corpus.push_back(random_text(rng, alphabet));
  SubwordModel full = train_subword(corpus, 64);
  auto total_symbols = [&](const SubwordModel& m) {
    size_t total = 0;
    for (const std::string& s : corpus) total += subword_encode(m, s).size();
    return total;
  };
  SubwordModel truncated = full;
  size_t prev = 0;
  for (size_t k = 0; k <= full.merges.size(); ++k) {
    truncated.merges.assign(full.merges.begin(), full.merges.begin() + k);
    size_t now = total_symbols(truncated);
    if (k > 0) CHECK(now <= prev);
    prev = now;
  }
}

TEST_CASE("model files round trip through save/load") {
  testutil::TempDir tmp("subword_io");
  SubwordModel model = train_subword({"hello world", "hello there"}, 40, Lang::hi);
  save_subword(model, tmp / "m.model");
  SubwordModel loaded = load_subword(tmp / "m.model");
  CHECK(loaded.lang == Lang::hi);
  CHECK(loaded.target_vocab == 40);
  CHECK(loaded.merges == model.merges);
  CHECK(subword_encode(loaded, "hello world hello") ==
        subword_encode(model, "hello world hello"));

  std::string header = testutil::read_file(tmp / "m.model");
  CHECK(header.rfind("subword v1 hi 40\n", 0) == 0);
}
