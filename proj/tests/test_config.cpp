#include <doctest.h>

#include "mill/config.hpp"
#include "testutil.hpp"

using namespace mill;

namespace {

KeyValues minimal_kv(const testutil::TempDir& tmp) {
  testutil::write_file(tmp / "en.jsonl", "");
  testutil::write_file(tmp / "hi.jsonl", "");
  return KeyValues{{"languages", "hi"},
                   {"input.en", (tmp / "en.jsonl").string()},
                   {"input.hi", (tmp / "hi.jsonl").string()},
                   {"output_dir", (tmp / "out").string()}};
}

}  // namespace

TEST_CASE("config file parsing") {
  testutil::TempDir tmp("config");
  testutil::write_file(tmp / "c.conf",
                       "# comment line\n"
                       "languages = hi,ta\n"
                       "docalign.window_days = 3   # trailing comment\n"
                       "\n"
                       "translator = exec:cat -\n");
  KeyValues kv = parse_config_file(tmp / "c.conf");
  CHECK(kv.at("languages") == "hi,ta");
  CHECK(kv.at("docalign.window_days") == "3");
  CHECK(kv.at("translator") == "exec:cat -");

  testutil::write_file(tmp / "bad.conf", "no equals sign\n");
  CHECK_THROWS_AS(parse_config_file(tmp / "bad.conf"), DataError);
}

TEST_CASE("overrides win") {
  KeyValues base = {{"seed", "1"}, {"jobs", "2"}};
  KeyValues cli = {{"seed", "9"}};
  KeyValues merged = merge_keyvalues(base, cli);
  CHECK(merged.at("seed") == "9");
  CHECK(merged.at("jobs") == "2");
}

TEST_CASE("make_pipeline_config applies defaults and validates") {
  testutil::TempDir tmp("config");
  PipelineConfig cfg = make_pipeline_config(minimal_kv(tmp));
  CHECK(cfg.languages == std::vector<Lang>{Lang::hi});
  CHECK(cfg.docalign.window_days == 2);
  CHECK(cfg.align.anchor_threshold == 0.1);
  CHECK(cfg.align.max_merge == 2);
  CHECK(cfg.vocab_size == 4000);
  CHECK(cfg.filter.max_len_ratio == 3.0);
  CHECK(cfg.seed == 1);
  CHECK(cfg.mode == DocAlignMode::tfidf);
}

TEST_CASE("config rejections") {
  testutil::TempDir tmp("config");

  KeyValues kv = minimal_kv(tmp);
  kv["bogus.key"] = "1";
  CHECK_THROWS_WITH_AS(static_cast<void>(make_pipeline_config(kv)),
                       doctest::Contains("unknown key"), DataError);

  kv = minimal_kv(tmp);
  kv["languages"] = "";
  CHECK_THROWS_WITH_AS(static_cast<void>(make_pipeline_config(kv)),
                       doctest::Contains("empty language set"), DataError);

  kv = minimal_kv(tmp);
  kv["languages"] = "hi,kn";
  CHECK_THROWS_AS(static_cast<void>(make_pipeline_config(kv)), DataError);

  kv = minimal_kv(tmp);
  kv["languages"] = "hi,en";
  CHECK_THROWS_WITH_AS(static_cast<void>(make_pipeline_config(kv)),
                       doctest::Contains("pivot"), DataError);

  kv = minimal_kv(tmp);
  kv.erase("input.en");
  CHECK_THROWS_WITH_AS(static_cast<void>(make_pipeline_config(kv)),
                       doctest::Contains("input.en"), DataError);

  kv = minimal_kv(tmp);
  kv["input.hi"] = (tmp / "missing.jsonl").string();
  CHECK_THROWS_WITH_AS(static_cast<void>(make_pipeline_config(kv)),
                       doctest::Contains("does not exist"), DataError);

  kv = minimal_kv(tmp);
  kv["align.anchor_threshold"] = "0";
  CHECK_THROWS_AS(static_cast<void>(make_pipeline_config(kv)), DataError);

  kv = minimal_kv(tmp);
  kv["docalign.window_days"] = "not a number";
  CHECK_THROWS_AS(static_cast<void>(make_pipeline_config(kv)), DataError);
}

TEST_CASE("canonical rendering is stable and digest-ready") {
  testutil::TempDir tmp("config");
  PipelineConfig a = make_pipeline_config(minimal_kv(tmp));
  PipelineConfig b = make_pipeline_config(minimal_kv(tmp));
  CHECK(a.canonical() == b.canonical());
  CHECK(a.canonical().find("subword.vocab_size = 4000") != std::string::npos);

  KeyValues kv = minimal_kv(tmp);
  kv["seed"] = "77";
  CHECK(make_pipeline_config(kv).canonical() != a.canonical());
}
