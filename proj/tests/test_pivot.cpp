#include <doctest.h>

#include <random>

#include "mill/pivot.hpp"

using namespace mill;

TEST_CASE("normalize_key trims, collapses and NFC-normalizes") {
  CHECK(normalize_key("A  B ") == "A B");
  CHECK(normalize_key("already normal") == "already normal");
  CHECK(normalize_key("café") == normalize_key("café"));
  CHECK(normalize_key("Case KEPT") == "Case KEPT");
  CHECK(normalize_key(" \t ") == "");
}

TEST_CASE("compile joins two languages on one English key") {
  std::map<Lang, std::vector<std::pair<std::string, std::string>>> by_lang;
  by_lang[Lang::hi] = {{"shared sentence", "हिन्दी"}};
  by_lang[Lang::ta] = {{"shared  sentence", "தமிழ்"}};  // same key after collapse
  CompileResult r = compile_records(by_lang);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].en_key == "shared sentence");
  CHECK(r.records[0].translations.at(Lang::hi) == "हिन्दी");
  CHECK(r.records[0].translations.at(Lang::ta) == "தமிழ்");
  CHECK(r.collisions == 0);

  auto hi_ta = extract_bitext(r.records, Lang::hi, Lang::ta);
  REQUIRE(hi_ta.size() == 1);
  CHECK(hi_ta[0] == std::pair<std::string, std::string>{"हिन्दी", "தமிழ்"});
}

TEST_CASE("disjoint keys produce no cross pairs") {
  std::map<Lang, std::vector<std::pair<std::string, std::string>>> by_lang;
  by_lang[Lang::hi] = {{"one", "एक"}};
  by_lang[Lang::ta] = {{"two", "இரண்டு"}};
  CompileResult r = compile_records(by_lang);
  CHECK(r.records.size() == 2);
  CHECK(extract_bitext(r.records, Lang::hi, Lang::ta).empty());
  CHECK(extract_bitext(r.records, Lang::en, Lang::hi).size() == 1);
}

TEST_CASE("records are sorted by key and deterministic under reordering") {
  std::map<Lang, std::vector<std::pair<std::string, std::string>>> fwd, rev;
  fwd[Lang::hi] = {{"b", "B-hi"}, {"a", "A-hi"}, {"c", "C-hi"}};
  rev[Lang::hi] = {{"c", "C-hi"}, {"a", "A-hi"}, {"b", "B-hi"}};
  CHECK(compile_records(fwd).records == compile_records(rev).records);
  auto records = compile_records(fwd).records;
  CHECK(records[0].en_key == "a");
  CHECK(records[2].en_key == "c");
}

TEST_CASE("collisions: keep-first counts, drop-all erases") {
  std::map<Lang, std::vector<std::pair<std::string, std::string>>> by_lang;
  by_lang[Lang::hi] = {{"key", "first"}, {"key", "second"}, {"key", "first"}};
  CompileResult keep = compile_records(by_lang, CollisionPolicy::keep_first);
  CHECK(keep.collisions == 1);  // the repeated identical pair is not a collision
  REQUIRE(keep.records.size() == 1);
  CHECK(keep.records[0].translations.at(Lang::hi) == "first");

  CompileResult drop = compile_records(by_lang, CollisionPolicy::drop_all);
  CHECK(drop.collisions == 1);
  CHECK(drop.records.empty());  // the only translation was dropped
}

TEST_CASE("en never appears in translations") {
  std::map<Lang, std::vector<std::pair<std::string, std::string>>> by_lang;
  by_lang[Lang::en] = {{"x", "y"}};
  CHECK_THROWS_AS(compile_records(by_lang), DataError);
}

TEST_CASE("extract_bitext rejects identical sides") {
  CHECK_THROWS_AS(extract_bitext({}, Lang::hi, Lang::hi), DataError);
}

TEST_CASE("hand-enumerated three-language grid") {
  std::map<Lang, std::vector<std::pair<std::string, std::string>>> by_lang;
  by_lang[Lang::hi] = {{"k1", "h1"}, {"k2", "h2"}, {"k3", "h3"}};
  by_lang[Lang::ta] = {{"k1", "t1"}, {"k3", "t3"}};
  by_lang[Lang::te] = {{"k3", "e3"}, {"k4", "e4"}};
  GridCounts grid = grid_counts(compile_records(by_lang).records);
  // Keys: k1 {hi,ta}, k2 {hi}, k3 {hi,ta,te}, k4 {te}.
  CHECK(grid.at(Lang::en, Lang::hi) == 3);
  CHECK(grid.at(Lang::en, Lang::ta) == 2);
  CHECK(grid.at(Lang::en, Lang::te) == 2);
  CHECK(grid.at(Lang::hi, Lang::ta) == 2);  // k1, k3
  CHECK(grid.at(Lang::hi, Lang::te) == 1);  // k3
  CHECK(grid.at(Lang::ta, Lang::te) == 1);  // k3
  CHECK(grid.at(Lang::hi, Lang::ml) == 0);
  CHECK_THROWS_AS(grid.at(Lang::hi, Lang::hi), DataError);
}

TEST_CASE("empty records give an all-zero grid") {
  GridCounts grid = grid_counts({});
  for (size_t i = 0; i < kAllLangs.size(); ++i)
    for (size_t j = i + 1; j < kAllLangs.size(); ++j)
      CHECK(grid.at(kAllLangs[i], kAllLangs[j]) == 0);
}

TEST_CASE("one record across three languages counts every pair once") {
  std::map<Lang, std::vector<std::pair<std::string, std::string>>> by_lang;
  by_lang[Lang::hi] = {{"k", "h"}};
  by_lang[Lang::ta] = {{"k", "t"}};
  GridCounts grid = grid_counts(compile_records(by_lang).records);
  CHECK(grid.at(Lang::en, Lang::hi) == 1);
  CHECK(grid.at(Lang::en, Lang::ta) == 1);
  CHECK(grid.at(Lang::hi, Lang::ta) == 1);
  CHECK(grid.at(Lang::ta, Lang::hi) == 1);  // symmetric accessor
}

TEST_CASE("randomized corpora: symmetry, dominance, consistency") {
  std::mt19937 rng(4242);
  std::vector<Lang> langs = {Lang::hi, Lang::ta, Lang::te, Lang::ml};
  for (int trial = 0; trial < 100; ++trial) {
    std::map<Lang, std::vector<std::pair<std::string, std::string>>> by_lang;
    for (Lang lang : langs) {
      int n = static_cast<int>(rng() % 12);
      for (int i = 0; i < n; ++i) {
        std::string key = "k" + std::to_string(rng() % 8);
        by_lang[lang].emplace_back(key, std::string(lang_code(lang)) + key);
      }
    }
    auto records = compile_records(by_lang).records;
    GridCounts grid = grid_counts(records);
    for (size_t i = 0; i < langs.size(); ++i) {
      for (size_t j = 0; j < langs.size(); ++j) {
        if (i == j) continue;
        Lang a = langs[i], b = langs[j];
        CHECK(grid.at(a, b) == grid.at(b, a));
        CHECK(grid.at(a, b) <= std::min(grid.at(a, Lang::en), grid.at(b, Lang::en)));
        CHECK(grid.at(a, b) ==
              static_cast<long>(extract_bitext(records, a, b).size()));
      }
      CHECK(grid.at(langs[i], Lang::en) ==
            static_cast<long>(extract_bitext(records, langs[i], Lang::en).size()));
    }
  }
}

TEST_CASE("grid TSV has the language header row and column") {
  GridCounts grid = grid_counts({});
  std::string tsv = grid.to_tsv();
  CHECK(tsv.find("\ten\thi\tta\tte\tml\tur\tbn\tgu\tmr\tor\tpa\n") == 0);
  CHECK(tsv.find("\nen\t-") != std::string::npos);
}
