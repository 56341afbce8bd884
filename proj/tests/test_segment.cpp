#include <doctest.h>

#include <random>

#include "mill/segment.hpp"
#include "mill/utf8.hpp"

using namespace mill;

namespace {

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char32_t cp : utf8::decode(s))
    if (!utf8::is_space(cp)) utf8::append(out, cp);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

TEST_CASE("split_sentences basics") {
  CHECK(split_sentences("", Lang::en).empty());
  CHECK(split_sentences("   \n\t ", Lang::hi).empty());

  auto en = split_sentences("A. B? C!", Lang::en);
  REQUIRE(en.size() == 3);
  CHECK(en[0] == "A.");
  CHECK(en[1] == "B?");
  CHECK(en[2] == "C!");
}

TEST_CASE("danda terminates Hindi sentences and stays attached") {
  std::string two = "यह एक। वह दो।";
  auto hi = split_sentences(two, Lang::hi);
  REQUIRE(hi.size() == 2);
  CHECK(hi[0].ends_with("।"));
  CHECK(hi[1].ends_with("।"));
}

TEST_CASE("urdu splits on its full stop only") {
  // '.' is not a terminator for ur; U+06D4 is.
  auto ur = split_sentences("ا۔ ب. ج۔", Lang::ur);
  REQUIRE(ur.size() == 2);
  CHECK(ur[0] == "ا۔");
  CHECK(ur[1] == "ب. ج۔");
}

TEST_CASE("terminator runs stay together") {
  auto en = split_sentences("Wait... what?! Done.", Lang::en);
  REQUIRE(en.size() == 3);
  CHECK(en[0] == "Wait...");
  CHECK(en[1] == "what?!");
  CHECK(en[2] == "Done.");
}

TEST_CASE("newlines always end a sentence") {
  auto en = split_sentences("Heading\nBody text.", Lang::en);
  REQUIRE(en.size() == 2);
  CHECK(en[0] == "Heading");
}

TEST_CASE("ellipsis is a terminator for en/ta/te/ml") {
  auto en = split_sentences("So… then", Lang::en);
  REQUIRE(en.size() == 2);
  CHECK(en[0] == "So…");
}

TEST_CASE("no characters are lost or invented") {
  std::mt19937 rng(7);
  const std::string alphabet[] = {"a", "b", ".", "?", "!", " ", "\n",
                                  "क", "।", "۔", "…"};
  for (Lang lang : {Lang::en, Lang::hi, Lang::ur, Lang::ta}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::string text;
      int len = static_cast<int>(rng() % 40);
      for (int i = 0; i < len; ++i) text += alphabet[rng() % std::size(alphabet)];
      auto sentences = split_sentences(text, lang);
      for (const std::string& s : sentences) {
        CHECK(!s.empty());
        CHECK(s.find('\n') == std::string::npos);
        CHECK(s == utf8::encode(utf8::decode(s)));  // valid UTF-8, trimmed
        CHECK(!utf8::is_space(utf8::decode(s).front()));
        CHECK(!utf8::is_space(utf8::decode(s).back()));
      }
      CHECK(strip_ws(join(sentences, " ")) == strip_ws(text));
    }
  }
}

TEST_CASE("word_tokenize basics") {
  CHECK(word_tokenize("").empty());
  CHECK(word_tokenize("hello, world") ==
        std::vector<std::string>{"hello", ",", "world"});
  // Internal punctuation and digit runs stay glued; only the edges detach.
  CHECK(word_tokenize("Rs.3,18,931.22") ==
        std::vector<std::string>{"Rs.3,18,931.22"});
  CHECK(word_tokenize("(2018)") == std::vector<std::string>{"(", "2018", ")"});
  CHECK(word_tokenize("वाक्य।") ==
        std::vector<std::string>{"वाक्य", "।"});
  CHECK(word_tokenize("--") == std::vector<std::string>{"-", "-"});
}

TEST_CASE("word_tokenize is stable") {
  std::mt19937 rng(17);
  const std::string alphabet[] = {"a", "zx", "7", ".", ",", "(", ")", " ",
                                  "क", "।", "य"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    int len = static_cast<int>(rng() % 30);
    for (int i = 0; i < len; ++i) text += alphabet[rng() % std::size(alphabet)];
    auto tokens = word_tokenize(text);
    CHECK(word_tokenize(join(tokens, " ")) == tokens);
  }
}
