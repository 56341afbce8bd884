#include <doctest.h>

#include "mill/corpus_io.hpp"
#include "testutil.hpp"

using namespace mill;

namespace {

const char* kThreeGood =
    R"({"id": "a1", "lang": "hi", "date": "2018-05-04", "title": "t", "body": "x"}
{"id": "a2", "lang": "en", "date": "2018-05-04", "body": "y"}
{"id": "a3", "lang": "ta", "date": "2018-05-06", "body": "z"}
)";

}  // namespace

TEST_CASE("date parsing") {
  Date d = Date::parse("2018-05-04");
  CHECK(d.year == 2018);
  CHECK(d.month == 5);
  CHECK(d.day == 4);
  CHECK(days_between(Date::parse("2018-05-02"), d) == 2);
  CHECK(days_between(d, Date::parse("2018-04-30")) == -4);

  CHECK_THROWS_AS(Date::parse("2018-02-30"), DataError);  // not a calendar date
  CHECK_THROWS_AS(Date::parse("2018-13-01"), DataError);
  CHECK_THROWS_AS(Date::parse("04-05-2018"), DataError);
  CHECK_THROWS_AS(Date::parse("2018-5-4"), DataError);
  CHECK(Date::parse("2020-02-29").valid());  // leap day
  CHECK_THROWS_AS(Date::parse("2019-02-29"), DataError);
}

TEST_CASE("load_articles happy path") {
  testutil::TempDir tmp("store");
  testutil::write_file(tmp / "a.jsonl", kThreeGood);
  ArticleCollection c = load_articles(tmp / "a.jsonl");
  CHECK(c.size() == 3);
  CHECK(c.find("a2")->lang == Lang::en);
  CHECK(c.find("a2")->title.empty());
  CHECK(c.find("nope") == nullptr);
  CHECK(c.by_lang(Lang::hi).size() == 1);
  CHECK(c.by_date(Date::parse("2018-05-04")).size() == 2);
}

TEST_CASE("load_articles hard errors carry the line number") {
  testutil::TempDir tmp("store");

  testutil::write_file(tmp / "kn.jsonl",
                       "{\"id\": \"k\", \"lang\": \"kn\", \"date\": "
                       "\"2018-01-01\", \"body\": \"x\"}\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(load_articles(tmp / "kn.jsonl")),
                       doctest::Contains("unknown language code"), DataError);

  testutil::write_file(tmp / "date.jsonl",
                       "{\"id\": \"d\", \"lang\": \"hi\", \"date\": "
                       "\"2018-02-30\", \"body\": \"x\"}\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(load_articles(tmp / "date.jsonl")),
                       doctest::Contains(":1:"), DataError);

  testutil::write_file(tmp / "dup.jsonl",
                       "{\"id\": \"x\", \"lang\": \"hi\", \"date\": "
                       "\"2018-01-01\", \"body\": \"a\"}\n"
                       "{\"id\": \"x\", \"lang\": \"hi\", \"date\": "
                       "\"2018-01-02\", \"body\": \"b\"}\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(load_articles(tmp / "dup.jsonl")),
                       doctest::Contains("duplicate"), DataError);

  testutil::write_file(tmp / "bad.jsonl", "not json at all\n");
  CHECK_THROWS_AS(static_cast<void>(load_articles(tmp / "bad.jsonl")), DataError);

  testutil::write_file(tmp / "empty_body.jsonl",
                       "{\"id\": \"e\", \"lang\": \"hi\", \"date\": "
                       "\"2018-01-01\", \"body\": \"\"}\n");
  CHECK_THROWS_AS(static_cast<void>(load_articles(tmp / "empty_body.jsonl")),
                  DataError);
  LoadOptions allow;
  allow.allow_empty_body = true;
  CHECK(load_articles(tmp / "empty_body.jsonl", allow).size() == 1);
}

TEST_CASE("lenient mode skips and counts") {
  testutil::TempDir tmp("store");
  testutil::write_file(tmp / "mixed.jsonl",
                       std::string(kThreeGood) +
                           "{\"id\": \"k\", \"lang\": \"kn\", \"date\": "
                           "\"2018-01-01\", \"body\": \"x\"}\n" +
                           "garbage\n");
  LoadOptions opts;
  opts.lenient = true;
  LoadReport report;
  ArticleCollection c = load_articles(tmp / "mixed.jsonl", opts, &report);
  CHECK(c.size() == 3);
  CHECK(report.loaded == 3);
  CHECK(report.skipped == 2);
}

TEST_CASE("write/load round trip is field-exact") {
  testutil::TempDir tmp("store");
  ArticleCollection c;
  c.add(Article{"b", Lang::ta, Date{2019, 2, 28}, "т шт", "body\nwith\nlines"});
  c.add(Article{"a", Lang::en, Date{2018, 1, 1}, "", "plain"});
  write_articles(c, tmp / "out.jsonl");
  ArticleCollection back = load_articles(tmp / "out.jsonl");
  CHECK(back == c);

  // Same bytes again: iteration order is id-sorted, not insertion-sorted.
  write_articles(back, tmp / "out2.jsonl");
  CHECK(testutil::read_file(tmp / "out.jsonl") ==
        testutil::read_file(tmp / "out2.jsonl"));
}

TEST_CASE("write_pairs sorts, escapes and counts") {
  testutil::TempDir tmp("pairs");
  CHECK(write_pairs({}, tmp / "empty.tsv") == 0);
  CHECK(testutil::read_file(tmp / "empty.tsv").empty());

  std::vector<OutputPair> pairs;
  pairs.push_back(OutputPair{"tab\there", "ok", 0.5, "doc2", "en1", 0});
  pairs.push_back(OutputPair{"first", "one", 1.0, "doc1", "en1", 1});
  pairs.push_back(OutputPair{"zeroth", "zero", 1.0, "doc1", "en1", 0});
  CHECK(write_pairs(pairs, tmp / "p.tsv") == 3);

  std::string text = testutil::read_file(tmp / "p.tsv");
  CHECK(text == "zeroth\tzero\t1.000000\tdoc1\ten1\n"
                "first\tone\t1.000000\tdoc1\ten1\n"
                "tab\\there\tok\t0.500000\tdoc2\ten1\n");

  auto back = read_pairs(tmp / "p.tsv");
  REQUIRE(back.size() == 3);
  CHECK(back[2].src_text == "tab\there");
}

TEST_CASE("field escaping round trips") {
  for (const char* s : {"plain", "a\tb", "a\nb", "back\\slash", "\\t literal",
                        "mix\\\t\n\\n"})
    CHECK(unescape_field(escape_field(s)) == s);
  CHECK(escape_field("a\tb") == "a\\tb");
  CHECK(escape_field("a\nb") == "a\\nb");
  CHECK(escape_field("a\\b") == "a\\\\b");
}

TEST_CASE("bitext export is line aligned") {
  testutil::TempDir tmp("bitext");
  write_bitext({{"x1", "y1"}, {"x2", "y2"}}, tmp / "hi-en", "hi", "en");
  CHECK(testutil::read_file(tmp / "hi-en" / "train.hi") == "x1\nx2\n");
  CHECK(testutil::read_file(tmp / "hi-en" / "train.en") == "y1\ny2\n");
}
