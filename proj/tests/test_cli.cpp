#include <doctest.h>

#include <cstdlib>

#include "testutil.hpp"

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string(MILL_CLI_PATH) + " " + args + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("") == 1);
  CHECK(run_cli("no-such-subcommand") == 1);
  CHECK(run_cli("segment --lang hi") == 1);  // missing required flags
  CHECK(run_cli("--help >/dev/null") == 0);
}

TEST_CASE("data errors exit 2") {
  testutil::TempDir tmp("cli");
  testutil::write_file(tmp / "bad.jsonl", "garbage\n");
  CHECK(run_cli("segment --lang hi --input " + (tmp / "bad.jsonl").string() +
                " --output " + (tmp / "out.tsv").string()) == 2);
  CHECK(run_cli("segment --lang hi --input " + (tmp / "missing.jsonl").string() +
                " --output " + (tmp / "out.tsv").string()) == 2);
}

TEST_CASE("segment subcommand writes the dump") {
  testutil::TempDir tmp("cli");
  testutil::write_file(tmp / "a.jsonl",
                       "{\"id\": \"a\", \"lang\": \"en\", \"date\": "
                       "\"2018-01-01\", \"body\": \"One. Two two.\"}\n");
  CHECK(run_cli("segment --lang en --input " + (tmp / "a.jsonl").string() +
                " --output " + (tmp / "s.tsv").string()) == 0);
  CHECK(testutil::read_file(tmp / "s.tsv") == "a\t0\tOne.\na\t1\tTwo two.\n");
}

TEST_CASE("bleu-score reports value x100 with precisions") {
  testutil::TempDir tmp("cli");
  testutil::write_file(tmp / "hyp.txt", "the cat sat\n");
  testutil::write_file(tmp / "ref.txt", "the cat sat\n");
  std::string cmd = std::string(MILL_CLI_PATH) + " bleu-score --hyp " +
                    (tmp / "hyp.txt").string() + " --ref " +
                    (tmp / "ref.txt").string() + " > " + (tmp / "out.txt").string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::string out = testutil::read_file(tmp / "out.txt");
  CHECK(out.find("BLEU = 100.00") != std::string::npos);
  CHECK(out.find("p1 = 1.0000 (3/3)") != std::string::npos);
  CHECK(out.find("p4 = undefined") != std::string::npos);
  CHECK(out.find("BP = 1.0000") != std::string::npos);

  testutil::write_file(tmp / "short.txt", "the cat\n");
  CHECK(run_cli("bleu-score --hyp " + (tmp / "hyp.txt").string() + " --ref " +
                (tmp / "short.txt").string() + " --max-n 2 >/dev/null") == 0);
  // mismatched line counts are a data error
  testutil::write_file(tmp / "two.txt", "a\nb\n");
  CHECK(run_cli("bleu-score --hyp " + (tmp / "hyp.txt").string() + " --ref " +
                (tmp / "two.txt").string()) == 2);
}

TEST_CASE("train-subword then sent-align through files") {
  testutil::TempDir tmp("cli");
  testutil::write_file(tmp / "lines.txt", "a b a\nb a b\n");
  CHECK(run_cli("train-subword --lang en --input " + (tmp / "lines.txt").string() +
                " --output " + (tmp / "m.model").string() + " --vocab-size 10") == 0);
  CHECK(testutil::read_file(tmp / "m.model").rfind("subword v1 en 10\n", 0) == 0);

  testutil::write_file(tmp / "src.jsonl",
                       "{\"id\": \"s\", \"lang\": \"en\", \"date\": "
                       "\"2018-01-01\", \"body\": \"x y z. p q r.\"}\n");
  testutil::write_file(tmp / "tgt.jsonl",
                       "{\"id\": \"t\", \"lang\": \"en\", \"date\": "
                       "\"2018-01-01\", \"body\": \"x y z. p q r.\"}\n");
  testutil::write_file(tmp / "dp.tsv", "s\tt\t1.000000\t0\n");
  CHECK(run_cli("sent-align --src " + (tmp / "src.jsonl").string() + " --en " +
                (tmp / "tgt.jsonl").string() + " --doc-pairs " +
                (tmp / "dp.tsv").string() + " --output " +
                (tmp / "pairs.tsv").string() + " --translator identity") == 0);
  std::string pairs = testutil::read_file(tmp / "pairs.tsv");
  CHECK(pairs == "x y z.\tx y z.\t1.000000\ts\tt\np q r.\tp q r.\t1.000000\ts\tt\n");
}

TEST_CASE("filter subcommand applies the policy") {
  testutil::TempDir tmp("cli");
  testutil::write_file(tmp / "pairs.tsv",
                       "यह ठीक है\tthis is fine\t1.000000\ts\tt\n"
                       "http://x.io\tnoise\t1.000000\ts\tt\n");
  CHECK(run_cli("filter --input " + (tmp / "pairs.tsv").string() +
                " --src-lang hi --output " + (tmp / "kept.tsv").string() +
                " --report " + (tmp / "report.txt").string()) == 0);
  CHECK(testutil::read_file(tmp / "kept.tsv") ==
        "यह ठीक है\tthis is fine\t1.000000\ts\tt\n");
  CHECK(testutil::read_file(tmp / "report.txt").find("url\t1") !=
        std::string::npos);
}

TEST_CASE("run chains everything and honors CLI overrides") {
  testutil::TempDir tmp("cli");
  testutil::write_file(tmp / "hi.jsonl",
                       "{\"id\": \"h\", \"lang\": \"hi\", \"date\": "
                       "\"2018-05-04\", \"body\": \"क ख ग।\"}\n");
  testutil::write_file(tmp / "en.jsonl",
                       "{\"id\": \"e\", \"lang\": \"en\", \"date\": "
                       "\"2018-05-04\", \"body\": \"a b c.\"}\n");
  testutil::write_file(tmp / "table.tsv", "क ख ग।\ta b c.\n");
  testutil::write_file(tmp / "run.conf",
                       "languages = hi\n"
                       "input.en = " + (tmp / "en.jsonl").string() + "\n"
                       "input.hi = " + (tmp / "hi.jsonl").string() + "\n"
                       "output_dir = " + (tmp / "out").string() + "\n"
                       "translator = table:" + (tmp / "table.tsv").string() + "\n"
                       "seed = 3\n");
  CHECK(run_cli("run --config " + (tmp / "run.conf").string()) == 0);
  CHECK(std::filesystem::exists(tmp / "out" / "manifest.json"));
  CHECK(std::filesystem::exists(tmp / "out" / "filtered.hi-en.tsv"));

  // A flag overrides the config: nonsense vocab budget kills the subword
  // stage, exit code 3.
  CHECK(run_cli("run --config " + (tmp / "run.conf").string() +
                " --output-dir " + (tmp / "out2").string() +
                " --vocab-size 1") == 3);
  CHECK(std::filesystem::exists(tmp / "out2" / "partial"));

  // Config data problems (unknown key) exit 2.
  testutil::write_file(tmp / "bad.conf", "nonsense = 1\n");
  CHECK(run_cli("run --config " + (tmp / "bad.conf").string()) == 2);
}
