#include <doctest.h>

#include "mill/filter.hpp"

using namespace mill;

namespace {

OutputPair pair(const std::string& src, const std::string& tgt) {
  return OutputPair{src, tgt, 1.0, "s", "t", 0};
}

const std::string kHindi = "यह एक अच्छा वाक्य है";
const std::string kEnglish = "this is a good sentence";

}  // namespace

TEST_CASE("clean same-length pair passes") {
  FilterDecision d = apply_policy(kHindi, kEnglish, Lang::hi, Lang::en, {});
  CHECK(d.keep);
  CHECK(d.reason == DropReason::ok);
}

TEST_CASE("length ratio imbalance") {
  FilterDecision d = apply_policy("a b c d e f g h i j", "x", Lang::en, Lang::en, {});
  CHECK(!d.keep);
  CHECK(d.reason == DropReason::ratio);

  // Exactly at the bound stays.
  CHECK(apply_policy("a b c", "x", Lang::en, Lang::en, {}).keep);
  CHECK(!apply_policy("a b c d", "x", Lang::en, Lang::en, {}).keep);
}

TEST_CASE("url-only segments are dropped") {
  FilterDecision d =
      apply_policy("http://example.com", kEnglish, Lang::hi, Lang::en, {});
  CHECK(!d.keep);
  CHECK(d.reason == DropReason::url);
  CHECK(!apply_policy(kHindi, "www.example.com .", Lang::hi, Lang::en, {}).keep);

  FilterPolicy keep_urls;
  keep_urls.drop_url_like = false;
  // With URLs allowed the pair dies on script purity instead.
  FilterDecision d2 =
      apply_policy("http://example.com", "http://example.com", Lang::hi, Lang::en,
                   keep_urls);
  CHECK(d2.reason != DropReason::url);
}

TEST_CASE("numeric-only segments are dropped") {
  FilterDecision d = apply_policy("12-05-2018", kEnglish, Lang::hi, Lang::en, {});
  CHECK(!d.keep);
  CHECK(d.reason == DropReason::numeric);
  CHECK(!apply_policy(kHindi, "31 , 12 , 2018", Lang::hi, Lang::en, {}).keep);
  // A sentence that merely contains numbers is fine.
  CHECK(apply_policy("कुल 42 वाक्य यहाँ हैं", "there are 42 sentences", Lang::hi,
                     Lang::en, {})
            .keep);
}

TEST_CASE("wrong script fails purity") {
  FilterDecision d = apply_policy(kEnglish, kEnglish, Lang::hi, Lang::en, {});
  CHECK(!d.keep);
  CHECK(d.reason == DropReason::script);

  // Mostly Devanagari with a sprinkle of Latin passes at the 0.5 default.
  CHECK(apply_policy(kHindi + " TCS", kEnglish, Lang::hi, Lang::en, {}).keep);
}

TEST_CASE("token count bounds") {
  FilterPolicy policy;
  policy.min_tokens = 2;
  policy.max_tokens = 5;
  CHECK(apply_policy("एक", "one", Lang::hi, Lang::en, policy).reason ==
        DropReason::too_short);
  CHECK(apply_policy(kHindi, "one two three four five six seven", Lang::hi,
                     Lang::en, policy)
            .reason == DropReason::too_long);
}

TEST_CASE("check order: length bounds beat numeric beats url beats script") {
  FilterPolicy policy;
  policy.min_tokens = 3;
  // Numeric-only AND too short: too_short wins, checks run in fixed order.
  CHECK(apply_policy("123", "456", Lang::hi, Lang::en, policy).reason ==
        DropReason::too_short);
  // Numeric-only and url-ish cannot overlap; numeric is checked first.
  CHECK(apply_policy("123 456", "789 000", Lang::hi, Lang::en, {}).reason ==
        DropReason::numeric);
}

TEST_CASE("run_filter keeps order, counts drops, dedups") {
  std::vector<OutputPair> input = {
      pair(kHindi, kEnglish),
      pair("http://x.io", kEnglish),
      pair(kHindi + " दूसरा", kEnglish + " second"),
      pair(kHindi, kEnglish),                       // exact duplicate
      pair(kHindi + "  ", " " + kEnglish),          // duplicate after normalize
      pair(kHindi, "x"),  // 5:1 blows the ratio cap
  };
  auto [kept, report] = run_filter(input, Lang::hi, Lang::en, {});
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].src_text == kHindi);
  CHECK(kept[1].src_text == kHindi + " दूसरा");
  CHECK(report.counts.at(DropReason::ok) == 2);
  CHECK(report.counts.at(DropReason::url) == 1);
  CHECK(report.counts.at(DropReason::duplicate) == 2);
  CHECK(report.counts.at(DropReason::ratio) == 1);

  // Conservation: kept + dropped = input.
  CHECK(static_cast<long>(kept.size()) + report.dropped() ==
        static_cast<long>(input.size()));
}

TEST_CASE("run_filter is idempotent") {
  std::vector<OutputPair> input = {
      pair(kHindi, kEnglish),
      pair(kHindi + " दूसरा", kEnglish + " second"),
      pair("http://x.io", kEnglish),
      pair(kHindi, kEnglish),
  };
  auto [kept, report1] = run_filter(input, Lang::hi, Lang::en, {});
  auto [kept2, report2] = run_filter(kept, Lang::hi, Lang::en, {});
  CHECK(kept2.size() == kept.size());
  CHECK(report2.dropped() == 0);
  CHECK(report2.counts.at(DropReason::ok) == static_cast<long>(kept.size()));
}

TEST_CASE("all-clean input passes untouched") {
  std::vector<OutputPair> input = {pair(kHindi, kEnglish),
                                   pair(kHindi + " दो", kEnglish + " two")};
  auto [kept, report] = run_filter(input, Lang::hi, Lang::en, {});
  CHECK(kept.size() == 2);
  for (const auto& [reason, count] : report.counts)
    if (reason != DropReason::ok) CHECK(count == 0);
}

TEST_CASE("report renders one reason per line") {
  auto [kept, report] = run_filter({pair(kHindi, kEnglish)}, Lang::hi, Lang::en, {});
  std::string text = report.to_text();
  CHECK(text.find("ok\t1") != std::string::npos);
  CHECK(text.find("duplicate\t0") != std::string::npos);
}
