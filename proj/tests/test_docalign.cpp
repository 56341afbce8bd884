#include <doctest.h>

#include <cmath>
#include <random>

#include "mill/docalign.hpp"
#include "mill/segment.hpp"
#include "testutil.hpp"

using namespace mill;

namespace {

// Dense reference computation: full tf-idf table, explicit normalization.
double dense_cosine(const std::map<std::string, TokenList>& docs,
                    const std::string& a, const std::string& b) {
  std::map<std::string, long> df;
  for (const auto& [id, tokens] : docs) {
    std::map<std::string, long> seen;
    for (const auto& t : tokens) seen[t] = 1;
    for (const auto& [t, _] : seen) ++df[t];
  }
  auto vec = [&](const std::string& id) {
    std::map<std::string, double> weights;
    for (const auto& t : docs.at(id)) weights[t] += 1.0;
    double norm = 0.0;
    for (auto& [t, w] : weights) {
      w *= std::log(static_cast<double>(docs.size()) / (1.0 + df.at(t))) + 1.0;
      norm += w * w;
    }
    norm = std::sqrt(norm);
    if (norm > 0)
      for (auto& [t, w] : weights) w /= norm;
    return weights;
  };
  auto va = vec(a), vb = vec(b);
  double dot = 0.0;
  for (const auto& [t, w] : va) {
    auto it = vb.find(t);
    if (it != vb.end()) dot += w * it->second;
  }
  return dot;
}

Article make_article(const std::string& id, Lang lang, const std::string& date,
                     const std::string& body) {
  return Article{id, lang, Date::parse(date), "", body};
}

TokenList toks(const std::string& text) { return word_tokenize(text); }

}  // namespace

TEST_CASE("cosine of a document with itself is 1") {
  std::map<std::string, TokenList> docs = {{"d", toks("a b b c")}};
  TfIdfIndex index = build_index(docs);
  CHECK(cosine(index, "d", "d") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("disjoint vocabularies give cosine 0") {
  std::map<std::string, TokenList> docs = {{"a", toks("x y z")},
                                           {"b", toks("p q r")}};
  TfIdfIndex index = build_index(docs);
  CHECK(cosine(index, "a", "b") == 0.0);
}

TEST_CASE("unknown ids are errors, empty docs are zero vectors") {
  std::map<std::string, TokenList> docs = {{"a", toks("x")}, {"none", {}}};
  TfIdfIndex index = build_index(docs);
  CHECK_THROWS_AS(cosine(index, "a", "nope"), DataError);
  CHECK(cosine(index, "a", "none") == 0.0);
}

TEST_CASE("toy corpus matches the dense reference, symmetrically") {
  std::map<std::string, TokenList> docs = {
      {"d1", toks("the cat sat on the mat")},
      {"d2", toks("the dog sat")},
      {"d3", toks("cats and dogs")}};
  TfIdfIndex index = build_index(docs);
  for (const auto& [a, _] : docs) {
    for (const auto& [b, __] : docs) {
      CHECK(cosine(index, a, b) ==
            doctest::Approx(dense_cosine(docs, a, b)).epsilon(1e-12));
      CHECK(cosine(index, a, b) ==
            doctest::Approx(cosine(index, b, a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("equivalence with dense computation on random corpora") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<std::string, TokenList> docs;
    int n = 2 + static_cast<int>(rng() % 19);
    for (int d = 0; d < n; ++d) {
      TokenList tokens;
      int len = static_cast<int>(rng() % 30);
      for (int i = 0; i < len; ++i)
        tokens.push_back("t" + std::to_string(rng() % 12));
      docs["doc" + std::to_string(d)] = tokens;
    }
    TfIdfIndex index = build_index(docs);
    for (const auto& [a, _] : docs)
      for (const auto& [b, __] : docs)
        CHECK(cosine(index, a, b) ==
              doctest::Approx(dense_cosine(docs, a, b)).epsilon(1e-9));
  }
}

TEST_CASE("idf scaling leaves cosines unchanged") {
  std::map<std::string, TokenList> docs = {
      {"d1", toks("a b c a")}, {"d2", toks("b c d")}, {"d3", toks("a d d")}};
  TfIdfIndex index = build_index(docs);
  // Rebuild vectors with every idf weight tripled, then renormalized.
  TfIdfIndex scaled = index;
  for (auto& [id, vec] : scaled.vectors) {
    (void)id;
    double norm = 0.0;
    for (auto& [tid, w] : vec) {
      w *= 3.0;
      norm += w * w;
    }
    norm = std::sqrt(norm);
    for (auto& [tid, w] : vec) w /= norm;
  }
  for (const auto& [a, _] : docs)
    for (const auto& [b, __] : docs)
      CHECK(cosine(index, a, b) ==
            doctest::Approx(cosine(scaled, a, b)).epsilon(1e-12));
}

TEST_CASE("align_documents finds the verbatim counterpart") {
  ArticleCollection src, en;
  src.add(make_article("h1", Lang::hi, "2018-05-04", "alpha beta gamma."));
  en.add(make_article("e1", Lang::en, "2018-05-04", "alpha beta gamma."));
  en.add(make_article("e2", Lang::en, "2018-05-05", "totally different words."));
  IdentityTranslator identity;
  DocAlignConfig cfg;
  cfg.term_space = TermSpace::word;
  DocAlignResult result = align_documents(src, en, identity, cfg);
  REQUIRE(result.pairs.size() == 1);
  CHECK(result.pairs[0].src_id == "h1");
  CHECK(result.pairs[0].tgt_id == "e1");
  CHECK(result.pairs[0].similarity == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(result.pairs[0].date_delta_days == 0);
}

TEST_CASE("candidates outside the window are never considered") {
  ArticleCollection src, en;
  src.add(make_article("h1", Lang::hi, "2018-05-04", "alpha beta gamma."));
  en.add(make_article("far", Lang::en, "2018-05-07", "alpha beta gamma."));
  IdentityTranslator identity;
  DocAlignConfig cfg;
  cfg.term_space = TermSpace::word;
  DocAlignResult result = align_documents(src, en, identity, cfg);
  CHECK(result.pairs.empty());  // identical content, 3 days away
  CHECK(result.unmatched_sources == 1);
}

TEST_CASE("equal similarity prefers the smaller date delta") {
  ArticleCollection src, en;
  src.add(make_article("h1", Lang::hi, "2018-05-04", "alpha beta."));
  en.add(make_article("later", Lang::en, "2018-05-05", "alpha beta."));
  en.add(make_article("same_day", Lang::en, "2018-05-04", "alpha beta."));
  IdentityTranslator identity;
  DocAlignConfig cfg;
  cfg.term_space = TermSpace::word;
  DocAlignResult result = align_documents(src, en, identity, cfg);
  REQUIRE(result.pairs.size() == 1);
  CHECK(result.pairs[0].tgt_id == "same_day");
}

TEST_CASE("similarity floor drops garbage nearest neighbours") {
  ArticleCollection src, en;
  src.add(make_article("h1", Lang::hi, "2018-05-04", "alpha beta gamma."));
  // One shared token gives a small positive cosine; a floor of 0.5 must
  // still reject it and leave the source unmatched.
  en.add(make_article("e1", Lang::en, "2018-05-04", "alpha unrelated text entirely."));
  IdentityTranslator identity;
  DocAlignConfig cfg;
  cfg.term_space = TermSpace::word;
  cfg.min_similarity = 0.5;
  DocAlignResult result = align_documents(src, en, identity, cfg);
  CHECK(result.pairs.empty());
  CHECK(result.unmatched_sources == 1);
}

TEST_CASE("window soundness over random dates") {
  std::mt19937 rng(7);
  IdentityTranslator identity;
  for (int trial = 0; trial < 25; ++trial) {
    ArticleCollection src, en;
    char buf[16];
    std::snprintf(buf, sizeof buf, "2018-03-%02d",
                  10 + static_cast<int>(rng() % 10));
    src.add(make_article("s", Lang::hi, buf, "common words here."));
    for (int e = 0; e < 6; ++e) {
      std::snprintf(buf, sizeof buf, "2018-03-%02d",
                    5 + static_cast<int>(rng() % 20));
      en.add(make_article("e" + std::to_string(e), Lang::en, buf,
                          "common words here."));
    }
    DocAlignConfig cfg;
    cfg.term_space = TermSpace::word;
    DocAlignResult result = align_documents(src, en, identity, cfg);
    for (const DocumentPair& p : result.pairs)
      CHECK(std::labs(p.date_delta_days) <= cfg.window_days);
  }
}

TEST_CASE("align_by_date pairs singletons and reports ambiguity") {
  ArticleCollection src, tgt;
  src.add(make_article("s1", Lang::hi, "2018-01-01", "x."));
  src.add(make_article("s2", Lang::hi, "2018-01-02", "y."));
  src.add(make_article("s3a", Lang::hi, "2018-01-03", "z."));
  src.add(make_article("s3b", Lang::hi, "2018-01-03", "w."));
  src.add(make_article("s4", Lang::hi, "2018-01-04", "only src."));
  tgt.add(make_article("t1", Lang::en, "2018-01-01", "x."));
  tgt.add(make_article("t2", Lang::en, "2018-01-02", "y."));
  tgt.add(make_article("t3", Lang::en, "2018-01-03", "z."));

  DateAlignResult result = align_by_date(src, tgt);
  REQUIRE(result.pairs.size() == 2);
  CHECK(result.pairs[0].src_id == "s1");
  CHECK(result.pairs[0].tgt_id == "t1");
  CHECK(result.pairs[1].src_id == "s2");
  REQUIRE(result.ambiguous.size() == 1);
  CHECK(result.ambiguous[0].date == Date::parse("2018-01-03"));
  CHECK(result.ambiguous[0].src_count == 2);
  CHECK(result.ambiguous[0].tgt_count == 1);
}

TEST_CASE("align_by_date with disjoint dates pairs nothing") {
  ArticleCollection src, tgt;
  src.add(make_article("s1", Lang::hi, "2018-01-01", "x."));
  tgt.add(make_article("t1", Lang::en, "2019-01-01", "x."));
  DateAlignResult result = align_by_date(src, tgt);
  CHECK(result.pairs.empty());
  CHECK(result.ambiguous.empty());
}
