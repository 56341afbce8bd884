#include <doctest.h>

#include "mill/translator.hpp"
#include "testutil.hpp"

using namespace mill;

TEST_CASE("identity translator echoes") {
  IdentityTranslator t;
  CHECK(*t.translate("वाक्य।", Lang::hi, Lang::en) == "वाक्य।");
  CHECK(t.concurrent_safe());
}

TEST_CASE("table translator looks up whitespace-normalized keys") {
  testutil::TempDir tmp("table");
  testutil::write_file(tmp / "t.tsv",
                       "नमस्ते\thello\n"
                       "एक  दो\tone two\n");
  TableTranslator t(tmp / "t.tsv");
  CHECK(t.size() == 2);
  CHECK(*t.translate("नमस्ते", Lang::hi, Lang::en) == "hello");
  CHECK(*t.translate("  नमस्ते  ", Lang::hi, Lang::en) == "hello");
  CHECK(*t.translate("एक दो", Lang::hi, Lang::en) == "one two");
  CHECK(!t.translate("missing", Lang::hi, Lang::en).has_value());
}

TEST_CASE("table translator rejects rows without a tab") {
  testutil::TempDir tmp("table");
  testutil::write_file(tmp / "bad.tsv", "no tab here\n");
  CHECK_THROWS_AS(TableTranslator(tmp / "bad.tsv"), DataError);
}

TEST_CASE("exec translator speaks the line protocol") {
  ExecTranslator cat("cat");
  CHECK(*cat.translate("hello world", Lang::hi, Lang::en) == "hello world");
  CHECK(*cat.translate("second line", Lang::hi, Lang::en) == "second line");
  CHECK(!cat.concurrent_safe());

  // The child must flush per line; stdbuf keeps tr honest about that.
  ExecTranslator upper("stdbuf -oL tr a-z A-Z");
  CHECK(*upper.translate("shout", Lang::hi, Lang::en) == "SHOUT");
}

TEST_CASE("exec translator escapes embedded newlines") {
  // cat echoes the escaped form back, so the round trip must restore LF.
  ExecTranslator cat("cat");
  CHECK(*cat.translate("two\nlines", Lang::hi, Lang::en) == "two\nlines");
  CHECK(*cat.translate("back\\slash", Lang::hi, Lang::en) == "back\\slash");
}

TEST_CASE("exec translator reports a dead child") {
  ExecTranslator dead("true");  // exits immediately, reads nothing
  CHECK_THROWS_AS(dead.translate("x", Lang::hi, Lang::en), DataError);
}

TEST_CASE("make_translator understands the three specs") {
  CHECK(make_translator("identity") != nullptr);
  testutil::TempDir tmp("spec");
  testutil::write_file(tmp / "t.tsv", "a\tb\n");
  CHECK(make_translator("table:" + (tmp / "t.tsv").string()) != nullptr);
  CHECK(make_translator("exec:cat") != nullptr);
  CHECK_THROWS_AS(make_translator("magic"), DataError);
  CHECK_THROWS_AS(make_translator("table:/nonexistent/file"), DataError);
}
