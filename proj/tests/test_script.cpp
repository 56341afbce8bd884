#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mill/script.hpp"
#include "testutil.hpp"

using namespace mill;

TEST_CASE("classify_char basics") {
  CHECK(classify_char(U'क') == Script::Devanagari);  // ka
  CHECK(classify_char(U'A') == Script::Latin);
  CHECK(classify_char(U'7') == Script::Digit);
  CHECK(classify_char(U'।') == Script::Punct);   // danda
  CHECK(classify_char(U'۔') == Script::Punct);   // Urdu full stop
  CHECK(classify_char(U'०') == Script::Digit);   // Devanagari zero
  CHECK(classify_char(U'க') == Script::Tamil);
  CHECK(classify_char(U'క') == Script::Telugu);
  CHECK(classify_char(U'ا') == Script::Arabic);
  CHECK(classify_char(U'中') == Script::Other);   // CJK: outside the set
  CHECK(classify_char(char32_t{0x10FFFF}) == Script::Other);
}

TEST_CASE("compiled ranges match the shipped table byte for byte") {
  std::ifstream in(testutil::source_dir() / "data/script_ranges.tsv");
  REQUIRE(in.good());
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string first, last, name;
    REQUIRE((std::getline(ss, first, '\t') && std::getline(ss, last, '\t') &&
             std::getline(ss, name)));
    REQUIRE(row < script_data::kRangeCount);
    const auto& range = script_data::kRanges[row];
    CHECK(range.first == std::stoul(first, nullptr, 16));
    CHECK(range.last == std::stoul(last, nullptr, 16));
    CHECK(range.script == parse_script(name));
    ++row;
  }
  CHECK(row == script_data::kRangeCount);
}

TEST_CASE("ranges are sorted and disjoint") {
  for (int i = 1; i < script_data::kRangeCount; ++i)
    CHECK(script_data::kRanges[i - 1].last < script_data::kRanges[i].first);
  for (int i = 0; i < script_data::kRangeCount; ++i)
    CHECK(script_data::kRanges[i].first <= script_data::kRanges[i].last);
}

TEST_CASE("sentence_profile fractions") {
  auto all_deva = sentence_profile("कखग");
  CHECK(all_deva.dominant == Script::Devanagari);
  CHECK(all_deva.fractions.at(Script::Devanagari) == doctest::Approx(1.0));

  auto empty = sentence_profile("");
  CHECK(empty.dominant == Script::Other);
  CHECK(empty.fractions.empty());
  auto digits = sentence_profile("12 345 .,!");
  CHECK(digits.dominant == Script::Other);
  CHECK(digits.fractions.empty());

  // Two Devanagari letters vs two Latin letters: an exact 0.5 / 0.5 tie.
  auto half = sentence_profile("कख ab");
  CHECK(half.fractions.at(Script::Devanagari) == doctest::Approx(0.5));
  CHECK(half.fractions.at(Script::Latin) == doctest::Approx(0.5));
  CHECK(half.dominant == Script::Other);
}

TEST_CASE("dominant script ignores digits and punctuation") {
  auto base = sentence_profile("कखग ab");
  auto noisy = sentence_profile("कखग, 123 ab! ।");
  CHECK(base.dominant == noisy.dominant);
  CHECK(base.fractions == noisy.fractions);
}

TEST_CASE("profiles of concatenations are length-weighted averages") {
  std::string a = "कखगघ";  // 4 Devanagari
  std::string b = "xy";                        // 2 Latin
  auto combined = sentence_profile(a + " " + b);
  CHECK(combined.fractions.at(Script::Devanagari) == doctest::Approx(4.0 / 6.0));
  CHECK(combined.fractions.at(Script::Latin) == doctest::Approx(2.0 / 6.0));
}

TEST_CASE("expected_script map") {
  CHECK(expected_script(Lang::hi) == Script::Devanagari);
  CHECK(expected_script(Lang::mr) == Script::Devanagari);
  CHECK(expected_script(Lang::ur) == Script::Arabic);
  CHECK(expected_script(Lang::en) == Script::Latin);
  CHECK(expected_script(Lang::bn) == Script::Bengali);
  CHECK(expected_script(Lang::pa) == Script::Gurmukhi);
  CHECK(expected_script(Lang::gu) == Script::Gujarati);
  CHECK(expected_script(Lang::or_) == Script::Oriya);
  CHECK(expected_script(Lang::ta) == Script::Tamil);
  CHECK(expected_script(Lang::te) == Script::Telugu);
  CHECK(expected_script(Lang::ml) == Script::Malayalam);
}

TEST_CASE("script_purity") {
  CHECK(script_purity("कख", Lang::hi) == doctest::Approx(1.0));
  CHECK(script_purity("कख ab", Lang::hi) == doctest::Approx(0.5));
  CHECK(script_purity("123 .,", Lang::hi) == doctest::Approx(1.0));  // vacuous
}
