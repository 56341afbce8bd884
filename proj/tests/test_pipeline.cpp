#include <doctest.h>

#include <fstream>

#include "mill/digest.hpp"
#include "mill/pipeline.hpp"
#include "testutil.hpp"

using namespace mill;

namespace {

// Four hi sentences across two dated articles, with English counterparts
// posted the same day and an exact-match translation table. Every stage
// count below is enumerable by hand.
void write_fixture(const std::filesystem::path& dir) {
  testutil::write_file(
      dir / "hi.jsonl",
      "{\"id\": \"h1\", \"lang\": \"hi\", \"date\": \"2018-05-04\", \"body\": "
      "\"क ख ग। घ ङ च।\"}\n"
      "{\"id\": \"h2\", \"lang\": \"hi\", \"date\": \"2018-05-05\", \"body\": "
      "\"छ ज झ। ञ ट ठ।\"}\n");
  testutil::write_file(
      dir / "en.jsonl",
      "{\"id\": \"e1\", \"lang\": \"en\", \"date\": \"2018-05-04\", \"body\": "
      "\"a b c. d e f.\"}\n"
      "{\"id\": \"e2\", \"lang\": \"en\", \"date\": \"2018-05-05\", \"body\": "
      "\"g h i. j k l.\"}\n");
  testutil::write_file(dir / "table.tsv",
                       "क ख ग।\ta b c.\n"
                       "घ ङ च।\td e f.\n"
                       "छ ज झ।\tg h i.\n"
                       "ञ ट ठ।\tj k l.\n");
}

PipelineConfig fixture_config(const std::filesystem::path& dir,
                              const std::filesystem::path& out) {
  KeyValues kv = {{"languages", "hi"},
                  {"input.en", (dir / "en.jsonl").string()},
                  {"input.hi", (dir / "hi.jsonl").string()},
                  {"output_dir", out.string()},
                  {"translator", "table:" + (dir / "table.tsv").string()}};
  return make_pipeline_config(kv);
}

std::vector<std::string> artifact_names(const nlohmann::json& manifest) {
  std::vector<std::string> names;
  for (const auto& [rel, digest] : manifest.at("outputs").items())
    names.push_back(rel);
  return names;
}

}  // namespace

TEST_CASE("toy fixture: stage counts match the hand enumeration") {
  testutil::TempDir tmp("pipe");
  write_fixture(tmp.path());
  nlohmann::json manifest = run_pipeline(fixture_config(tmp.path(), tmp / "out"));

  const auto& stages = manifest.at("stages");
  CHECK(stages.at("load").at("hi").at("articles") == 2);
  CHECK(stages.at("load").at("en").at("articles") == 2);
  CHECK(stages.at("segment").at("hi") == 4);
  CHECK(stages.at("segment").at("en") == 4);
  CHECK(stages.at("docalign").at("hi").at("pairs") == 2);
  CHECK(stages.at("sentalign").at("hi").at("pairs") == 4);
  CHECK(stages.at("sentalign").at("hi").at("failed_sentences") == 0);
  CHECK(stages.at("filter").at("hi").at("ok") == 4);
  CHECK(stages.at("filter").at("hi").at("duplicate") == 0);
  CHECK(stages.at("pivot").at("records") == 4);
  CHECK(stages.at("pivot").at("collisions") == 0);
  CHECK(stages.at("stats").at("audit_sample") == 4);

  // The doc aligner must pair same-date articles, similarity 1.
  std::string doc_pairs = testutil::read_file(tmp / "out" / "doc_pairs.hi-en.tsv");
  CHECK(doc_pairs == "h1\te1\t1.000000\t0\nh2\te2\t1.000000\t0\n");

  std::string grid = testutil::read_file(tmp / "out" / "grid.tsv");
  CHECK(grid.find("\nen\t-\t4") != std::string::npos);

  std::string stats = testutil::read_file(tmp / "out" / "stats.txt");
  CHECK(stats.find("vocabulary\t12\t12") != std::string::npos);

  CHECK(std::filesystem::exists(tmp / "out" / "bitext" / "en-hi" / "train.en"));
  CHECK(!std::filesystem::exists(tmp / "out" / "partial"));

  // Every artifact is referenced with its digest; no orphans on disk.
  auto names = artifact_names(manifest);
  for (const std::string& rel : names) {
    CHECK(std::filesystem::exists(tmp / "out" / rel));
    CHECK(manifest.at("outputs").at(rel) == sha256_file(tmp / "out" / rel));
  }
  long files_on_disk = 0;
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(tmp / "out"))
    if (entry.is_regular_file()) ++files_on_disk;
  CHECK(files_on_disk == static_cast<long>(names.size()) + 1);  // + manifest

  CHECK(manifest.at("config_digest") ==
        sha256_hex(fixture_config(tmp.path(), tmp / "out").canonical()));
}

TEST_CASE("reruns are byte-identical, timestamp aside, at any job count") {
  testutil::TempDir tmp("pipe");
  write_fixture(tmp.path());

  PipelineConfig one = fixture_config(tmp.path(), tmp / "out1");
  PipelineConfig two = fixture_config(tmp.path(), tmp / "out2");
  PipelineConfig par = fixture_config(tmp.path(), tmp / "out3");
  par.jobs = 4;

  nlohmann::json m1 = run_pipeline(one);
  nlohmann::json m2 = run_pipeline(two);
  nlohmann::json m3 = run_pipeline(par);

  for (nlohmann::json* m : {&m1, &m2, &m3}) m->erase("created_at");
  // Output dirs differ in the canonical config; align them before diffing.
  auto strip = [](nlohmann::json& m) {
    m.erase("config");
    m.erase("config_digest");
  };
  strip(m1);
  strip(m2);
  strip(m3);
  CHECK(m1.at("outputs") == m2.at("outputs"));
  CHECK(m1.at("outputs") == m3.at("outputs"));
  CHECK(m1.at("stages") == m2.at("stages"));
  CHECK(m1.at("stages") == m3.at("stages"));

  for (const std::string& rel : artifact_names(m1))
    CHECK(testutil::read_file(tmp / "out1" / rel) ==
          testutil::read_file(tmp / "out2" / rel));
}

TEST_CASE("a failing stage leaves partial/ and no promoted artifacts") {
  testutil::TempDir tmp("pipe");
  write_fixture(tmp.path());
  PipelineConfig cfg = fixture_config(tmp.path(), tmp / "out");
  cfg.vocab_size = 2;  // below the character inventory: subword stage dies

  CHECK_THROWS_WITH_AS(static_cast<void>(run_pipeline(cfg)),
                       doctest::Contains("stage subword"), StageError);
  CHECK(std::filesystem::exists(tmp / "out" / "partial" / "sentences.hi.tsv"));
  CHECK(!std::filesystem::exists(tmp / "out" / "sentences.hi.tsv"));
  CHECK(!std::filesystem::exists(tmp / "out" / "manifest.json"));
}

TEST_CASE("articles tagged with the wrong language fail the load stage") {
  testutil::TempDir tmp("pipe");
  write_fixture(tmp.path());
  testutil::write_file(
      tmp / "bad.jsonl",
      "{\"id\": \"x\", \"lang\": \"ta\", \"date\": \"2018-05-04\", \"body\": "
      "\"t.\"}\n");
  PipelineConfig cfg = fixture_config(tmp.path(), tmp / "out");
  cfg.inputs[Lang::hi] = tmp / "bad.jsonl";
  CHECK_THROWS_WITH_AS(static_cast<void>(run_pipeline(cfg)),
                       doctest::Contains("stage load"), StageError);
}
