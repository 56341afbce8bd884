#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mill/unicode_norm.hpp"
#include "mill/utf8.hpp"
#include "testutil.hpp"

using namespace mill;

namespace {

std::vector<char32_t> parse_hex_cps(const std::string& field) {
  std::vector<char32_t> cps;
  std::istringstream ss(field);
  std::string hex;
  while (ss >> hex) cps.push_back(static_cast<char32_t>(std::stoul(hex, nullptr, 16)));
  return cps;
}

}  // namespace

TEST_CASE("utf8 round trip") {
  std::string s = "abc \xe0\xa4\x95\xe0\xa4\xbc xyz \xf0\x9f\x98\x80";
  CHECK(utf8::encode(utf8::decode(s)) == s);
  CHECK(utf8::decode("").empty());
}

TEST_CASE("utf8 invalid bytes become replacement chars") {
  std::string bogus = "a\xff\xfe b\xe0\xa4";  // stray bytes + truncated seq
  auto cps = utf8::decode(bogus);
  CHECK(std::count(cps.begin(), cps.end(), char32_t{0xFFFD}) >= 3);
  // Never throws, always round-trips to valid UTF-8.
  CHECK(utf8::decode(utf8::encode(cps)) == cps);
}

TEST_CASE("nfc matches the reference vectors") {
  std::ifstream in(testutil::source_dir() / "tests/data/nfc_cases.tsv");
  REQUIRE(in.good());
  std::string line;
  long cases = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    auto input = parse_hex_cps(line.substr(0, tab));
    auto expected = parse_hex_cps(line.substr(tab + 1));
    CHECK(nfc(input) == expected);
    ++cases;
  }
  CHECK(cases > 2000);
}

TEST_CASE("nfc is idempotent on the reference inputs") {
  std::ifstream in(testutil::source_dir() / "tests/data/nfc_cases.tsv");
  REQUIRE(in.good());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto input = parse_hex_cps(line.substr(0, line.find('\t')));
    auto once = nfc(input);
    CHECK(nfc(once) == once);
  }
}
