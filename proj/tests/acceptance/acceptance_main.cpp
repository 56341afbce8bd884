// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits with the number of failures. Oracle-backed checks use the brute
// force reference implementations from oracles.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "mill/digest.hpp"
#include "mill/pipeline.hpp"
#include "mill/segment.hpp"
#include "mill/stats.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace mill;

namespace {

std::mt19937_64 g_rng;

// ---------------------------------------------------------------------------
// Synthetic bilingual corpus: an invertible word-substitution table between
// a Devanagari-script source language and an ASCII target language.

const char* kDevChars[] = {"क", "ख", "ग", "घ", "ङ",
                           "च", "छ", "ज", "झ", "ञ"};

std::string src_word(int i) {
  return std::string(kDevChars[(i / 100) % 10]) + kDevChars[(i / 10) % 10] +
         kDevChars[i % 10];
}

std::string en_word(int i) { return "w" + std::to_string(i); }

struct SynthCorpus {
  ArticleCollection src_articles;
  ArticleCollection en_articles;
  std::map<std::string, std::string> table;  // src sentence -> en sentence
  std::vector<GoldPair> gold;
};

// Articles share one posted date, so document alignment rests entirely on
// TF-IDF. With `noisy`, the target side loses ~10% of its sentences and
// merges ~10% of them into adjacent ones (terminator dropped, so the
// segmenter keeps the merge intact); gold tracks the surviving spans.
SynthCorpus make_corpus(int docs, int sents_per_doc, int vocab, bool noisy) {
  SynthCorpus corpus;
  for (int d = 0; d < docs; ++d) {
    std::string src_id = "s" + std::to_string(d);
    std::string en_id = "e" + std::to_string(d);
    std::vector<std::string> src_sents, en_sents;
    for (int s = 0; s < sents_per_doc; ++s) {
      int len = 4 + static_cast<int>(g_rng() % 5);  // 4..8 words
      std::string src_text, en_text;
      for (int w = 0; w < len; ++w) {
        int word = static_cast<int>(g_rng() % vocab);
        if (w) {
          src_text += ' ';
          en_text += ' ';
        }
        src_text += src_word(word);
        en_text += en_word(word);
      }
      src_text += "।";
      en_text += ".";
      corpus.table[src_text] = en_text;
      src_sents.push_back(std::move(src_text));
      en_sents.push_back(std::move(en_text));
    }

    // Perturb the target side: disjoint adjacent merges first, then
    // deletions among untouched sentences.
    std::vector<int> kind(sents_per_doc, 0);  // 0 keep, 1 merge-start, 2 gone
    if (noisy) {
      for (int j = 0; j + 1 < sents_per_doc; ++j)
        if (kind[j] == 0 && kind[j + 1] == 0 && g_rng() % 100 < 15) {
          kind[j] = 1;
          kind[j + 1] = 3;  // absorbed into j
        }
      for (int j = 0; j < sents_per_doc; ++j)
        if (kind[j] == 0 && g_rng() % 100 < 12) kind[j] = 2;
    }

    std::vector<std::string> final_tgt;
    for (int j = 0; j < sents_per_doc; ++j) {
      int k = static_cast<int>(final_tgt.size());
      if (kind[j] == 0) {
        final_tgt.push_back(en_sents[j]);
        corpus.gold.push_back(GoldPair{src_id, j, j, en_id, k, k});
      } else if (kind[j] == 1) {
        std::string merged = en_sents[j];
        merged.pop_back();  // drop the internal terminator
        merged += ' ';
        merged += en_sents[j + 1];
        final_tgt.push_back(std::move(merged));
        corpus.gold.push_back(GoldPair{src_id, j, j + 1, en_id, k, k});
        ++j;  // skip the absorbed sentence
      }
      // kind 2: deleted, contributes nothing
    }

    auto join = [](const std::vector<std::string>& sents) {
      std::string body;
      for (const std::string& s : sents) {
        if (!body.empty()) body += ' ';
        body += s;
      }
      return body;
    };
    corpus.src_articles.add(
        Article{src_id, Lang::hi, Date{2020, 1, 15}, "", join(src_sents)});
    corpus.en_articles.add(
        Article{en_id, Lang::en, Date{2020, 1, 15}, "", join(final_tgt)});
  }
  return corpus;
}

std::filesystem::path write_table(const SynthCorpus& corpus,
                                  const std::filesystem::path& dir) {
  std::filesystem::path path = dir / "table.tsv";
  std::string text;
  for (const auto& [src, tgt] : corpus.table) text += src + '\t' + tgt + '\n';
  testutil::write_file(path, text);
  return path;
}

// Document alignment then sentence alignment, the pipeline's alignment path.
std::vector<GoldPair> align_corpus(const SynthCorpus& corpus,
                                   Translator& translator,
                                   const AlignConfig& cfg) {
  DocAlignConfig dcfg;
  dcfg.term_space = TermSpace::word;
  DocAlignResult docs =
      align_documents(corpus.src_articles, corpus.en_articles, translator, dcfg);
  std::vector<GoldPair> predicted;
  for (const DocumentPair& dp : docs.pairs) {
    const Article& src = *corpus.src_articles.find(dp.src_id);
    const Article& tgt = *corpus.en_articles.find(dp.tgt_id);
    for (const SentencePair& sp : align_sentence_level(
             dp, src, tgt, translator, cfg, word_tokenizer()))
      predicted.push_back(GoldPair{sp.src_article, sp.src_span.first,
                                   sp.src_span.last, sp.tgt_article,
                                   sp.tgt_span.first, sp.tgt_span.last});
  }
  return predicted;
}

// ---------------------------------------------------------------------------

bool criterion_bleu_oracle(std::string& note) {
  std::mt19937_64 rng(101);
  auto random_tokens = [&](int max_len, int vocab) {
    TokenList tokens;
    int len = 1 + static_cast<int>(rng() % max_len);
    for (int i = 0; i < len; ++i)
      tokens.push_back("t" + std::to_string(rng() % vocab));
    return tokens;
  };
  for (int trial = 0; trial < 50; ++trial) {
    TokenList hyp = random_tokens(12, 4);
    TokenList ref = random_tokens(12, 4);
    double ours = corpus_bleu({{hyp, ref}}, 4).value;
    double brute = oracles::brute_corpus_bleu({{hyp, ref}}, 4);
    if (std::fabs(ours - brute) > 1e-9) {
      note = "corpus_bleu disagrees with the oracle";
      return false;
    }
    double s_ours = sentence_bleu(hyp, ref, 2);
    double s_brute = oracles::brute_sentence_bleu(hyp, ref, 2);
    if (std::fabs(s_ours - s_brute) > 1e-9) {
      note = "sentence_bleu disagrees with the oracle";
      return false;
    }
  }
  Fraction clipped = modified_precision(TokenList(7, "the"),
                                        {{"the", "cat", "sat"}}, 1);
  if (clipped.matches != 1 || clipped.total != 7) {
    note = "clipped case is not exactly 1/7";
    return false;
  }
  note = "50 random pairs + clipped 1/7";
  return true;
}

bool criterion_dp_oracle(std::string& note) {
  std::mt19937_64 rng(202);
  auto dyadic = [&] { return static_cast<double>(rng() % 1025) / 1024.0; };
  for (int trial = 0; trial < 500; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 7);
    int cols = 1 + static_cast<int>(rng() % 7);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = dyadic();
    double threshold = 0.05 + 0.9 * dyadic();
    auto fast = anchor_align(m, threshold);
    auto brute = oracles::brute_anchor(m, threshold);
    if (fast != brute) {
      std::ostringstream oss;
      oss << "mismatch at trial " << trial << " (" << rows << "x" << cols << ")";
      note = oss.str();
      return false;
    }
    double fast_total = 0.0, brute_total = 0.0;
    for (auto [i, j] : fast) fast_total += m.at(i, j);
    for (auto [i, j] : brute) brute_total += m.at(i, j);
    if (fast_total != brute_total) {
      note = "totals differ";
      return false;
    }
  }
  note = "500 random matrices up to 7x7, exact equality";
  return true;
}

bool criterion_synthetic_recovery(std::string& note) {
  AlignConfig cfg;
  cfg.anchor_threshold = 0.7;  // anchors must be near-exact matches

  g_rng.seed(303);
  SynthCorpus clean = make_corpus(50, 8, 300, false);
  testutil::TempDir tmp("accept3");
  TableTranslator clean_translator(write_table(clean, tmp.path()));
  AlignmentQuality q =
      score_against_gold(align_corpus(clean, clean_translator, cfg), clean.gold);
  if (q.precision != 1.0 || q.recall != 1.0) {
    std::ostringstream oss;
    oss << "clean recovery P=" << q.precision << " R=" << q.recall;
    note = oss.str();
    return false;
  }

  g_rng.seed(404);
  SynthCorpus noisy = make_corpus(50, 8, 300, true);
  TableTranslator noisy_translator(write_table(noisy, tmp.path()));
  AlignmentQuality nq =
      score_against_gold(align_corpus(noisy, noisy_translator, cfg), noisy.gold);
  std::ostringstream oss;
  oss.precision(4);
  oss << "clean P=R=1; noisy P=" << nq.precision << " R=" << nq.recall;
  note = oss.str();
  return nq.precision >= 0.95 && nq.recall >= 0.85;
}

bool criterion_date_window(std::string& note) {
  std::mt19937_64 rng(505);
  IdentityTranslator identity;
  for (int trial = 0; trial < 100; ++trial) {
    std::string body = "alpha beta gamma delta epsilon.";
    int src_day = 10 + static_cast<int>(rng() % 5);
    int offset = static_cast<int>(rng() % 5) - 2;       // within +-2
    int decoy_side = rng() % 2 ? 3 : -3;                // exactly 3 away

    ArticleCollection src, en;
    src.add(Article{"s", Lang::hi, Date{2020, 3, static_cast<unsigned>(src_day)},
                    "", body});
    en.add(Article{"planted", Lang::en,
                   Date{2020, 3, static_cast<unsigned>(src_day + offset)}, "",
                   body});
    en.add(Article{"decoy", Lang::en,
                   Date{2020, 3, static_cast<unsigned>(src_day + decoy_side)}, "",
                   body});

    DocAlignConfig cfg;
    cfg.term_space = TermSpace::word;
    DocAlignResult result = align_documents(src, en, identity, cfg);
    if (result.pairs.size() != 1 || result.pairs[0].tgt_id != "planted") {
      note = "picked the decoy or nothing at trial " + std::to_string(trial);
      return false;
    }
  }
  note = "100/100 planted counterparts, decoy never chosen";
  return true;
}

bool criterion_pivot_grid(std::string& note) {
  // Hand-enumerated toy: keys k1 {hi,ta}, k2 {hi}, k3 {hi,ta,te}, k4 {te}.
  std::map<Lang, std::vector<std::pair<std::string, std::string>>> toy;
  toy[Lang::hi] = {{"k1", "h1"}, {"k2", "h2"}, {"k3", "h3"}};
  toy[Lang::ta] = {{"k1", "t1"}, {"k3", "t3"}};
  toy[Lang::te] = {{"k3", "e3"}, {"k4", "e4"}};
  GridCounts grid = grid_counts(compile_records(toy).records);
  struct {
    Lang a, b;
    long want;
  } expected[] = {{Lang::en, Lang::hi, 3}, {Lang::en, Lang::ta, 2},
                  {Lang::en, Lang::te, 2}, {Lang::hi, Lang::ta, 2},
                  {Lang::hi, Lang::te, 1}, {Lang::ta, Lang::te, 1},
                  {Lang::hi, Lang::ml, 0}};
  for (const auto& e : expected)
    if (grid.at(e.a, e.b) != e.want) {
      note = "toy grid cell mismatch";
      return false;
    }

  std::mt19937_64 rng(606);
  std::vector<Lang> langs = {Lang::hi, Lang::ta, Lang::te, Lang::ml, Lang::ur};
  for (int trial = 0; trial < 1000; ++trial) {
    std::map<Lang, std::vector<std::pair<std::string, std::string>>> by_lang;
    for (Lang lang : langs) {
      int n = static_cast<int>(rng() % 10);
      for (int i = 0; i < n; ++i) {
        std::string key = "k" + std::to_string(rng() % 7);
        by_lang[lang].emplace_back(key, std::string(lang_code(lang)) + key);
      }
    }
    auto records = compile_records(by_lang).records;
    GridCounts g = grid_counts(records);
    for (size_t i = 0; i < langs.size(); ++i) {
      for (size_t j = 0; j < langs.size(); ++j) {
        if (i == j) continue;
        Lang a = langs[i], b = langs[j];
        if (g.at(a, b) != g.at(b, a)) {
          note = "symmetry violated";
          return false;
        }
        if (g.at(a, b) > std::min(g.at(a, Lang::en), g.at(b, Lang::en))) {
          note = "dominance violated";
          return false;
        }
        if (g.at(a, b) !=
            static_cast<long>(extract_bitext(records, a, b).size())) {
          note = "grid count disagrees with extract_bitext";
          return false;
        }
      }
    }
  }
  note = "toy grid exact; 1000 randomized corpora hold the invariants";
  return true;
}

bool criterion_subword_roundtrip(std::string& note) {
  std::mt19937_64 rng(707);
  std::vector<std::string> alphabet = {"a", "b", "c", "d", "e",
                                       "क", "ख", "ग", "1", "x"};
  auto random_text = [&] {
    std::string text;
    int words = 1 + static_cast<int>(rng() % 7);
    for (int w = 0; w < words; ++w) {
      if (w) text += ' ';
      int chars = 1 + static_cast<int>(rng() % 9);
      for (int c = 0; c < chars; ++c) text += alphabet[rng() % alphabet.size()];
    }
    return text;
  };
  std::vector<std::string> corpus;
  for (int i = 0; i < 400; ++i) corpus.push_back(random_text());
  SubwordModel model = train_subword(corpus, 4000);
  if (static_cast<long>(model.vocab.size()) >
      4000 + static_cast<long>(alphabet.size())) {
    note = "vocabulary bound violated";
    return false;
  }
  for (int i = 0; i < 1000; ++i) {
    std::string text = random_text();
    if (subword_decode(subword_encode(model, text)) != text) {
      note = "round trip failed on: " + text;
      return false;
    }
  }
  std::ostringstream oss;
  oss << "1000 round trips; " << model.vocab.size() << " symbols <= 4000 + "
      << alphabet.size() << " chars";
  note = oss.str();
  return true;
}

bool criterion_oov(std::string& note) {
  std::mt19937_64 rng(808);
  auto random_vocab = [&](int types, const std::string& prefix) {
    Vocabulary v;
    for (int i = 0; i < types; ++i)
      ++v.types[prefix + std::to_string(rng() % 60)];
    return v;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Vocabulary train = random_vocab(1 + static_cast<int>(rng() % 40), "t");
    Vocabulary test = random_vocab(1 + static_cast<int>(rng() % 40), "t");
    if (oov_rate(test, test) != 0.0) {
      note = "self-OOV is not 0";
      return false;
    }
    Vocabulary foreign = random_vocab(1 + static_cast<int>(rng() % 40), "f");
    if (oov_rate(train, foreign) != 100.0) {
      note = "disjoint OOV is not 100";
      return false;
    }
    double before = oov_rate(train, test);
    Vocabulary grown = train;
    for (int i = 0; i < 10; ++i) ++grown.types["t" + std::to_string(rng() % 60)];
    if (oov_rate(grown, test) > before) {
      note = "monotonicity violated";
      return false;
    }
  }
  note = "self 0, disjoint 100, monotone over 200 random pairs";
  return true;
}

bool criterion_determinism(std::string& note) {
  g_rng.seed(909);
  SynthCorpus corpus = make_corpus(10, 6, 120, false);
  testutil::TempDir tmp("accept8");
  write_articles(corpus.src_articles, tmp / "hi.jsonl");
  write_articles(corpus.en_articles, tmp / "en.jsonl");
  std::filesystem::path table = write_table(corpus, tmp.path());

  auto config_for = [&](const std::string& out, int jobs) {
    KeyValues kv = {{"languages", "hi"},
                    {"input.en", (tmp / "en.jsonl").string()},
                    {"input.hi", (tmp / "hi.jsonl").string()},
                    {"output_dir", (tmp / out).string()},
                    {"translator", "table:" + table.string()},
                    {"jobs", std::to_string(jobs)}};
    return make_pipeline_config(kv);
  };

  nlohmann::json m1 = run_pipeline(config_for("out1", 1));
  nlohmann::json m2 = run_pipeline(config_for("out2", 1));
  nlohmann::json m3 = run_pipeline(config_for("out3", 4));

  if (m1.at("stages") != m2.at("stages") || m1.at("stages") != m3.at("stages")) {
    note = "stage counts differ between runs";
    return false;
  }
  if (m1.at("outputs") != m2.at("outputs") ||
      m1.at("outputs") != m3.at("outputs")) {
    note = "artifact digests differ between runs";
    return false;
  }
  long artifacts = 0;
  for (const auto& [rel, digest] : m1.at("outputs").items()) {
    (void)digest;
    if (testutil::read_file(tmp / "out1" / rel) !=
            testutil::read_file(tmp / "out2" / rel) ||
        testutil::read_file(tmp / "out1" / rel) !=
            testutil::read_file(tmp / "out3" / rel)) {
      note = "artifact bytes differ: " + rel;
      return false;
    }
    ++artifacts;
  }
  std::ostringstream oss;
  oss << artifacts
      << " artifacts byte-identical across serial and 4-thread runs";
  note = oss.str();
  return true;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 = no limit stated
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "BLEU oracle equivalence", 1.0, criterion_bleu_oracle},
      {2, "alignment DP oracle", 5.0, criterion_dp_oracle},
      {3, "end-to-end synthetic recovery", 30.0, criterion_synthetic_recovery},
      {4, "date-window soundness", 0.0, criterion_date_window},
      {5, "pivot grid correctness", 0.0, criterion_pivot_grid},
      {6, "subword round trip", 0.0, criterion_subword_roundtrip},
      {7, "OOV properties", 0.0, criterion_oov},
      {8, "pipeline determinism", 0.0, criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && c.time_limit_s > 0 && elapsed > c.time_limit_s) {
      ok = false;
      note += " [over the " + std::to_string(c.time_limit_s) + "s budget]";
    }
    std::printf("criterion %d (%s): %s (%.2fs) %s\n", c.id, c.name,
                ok ? "PASS" : "FAIL", elapsed, note.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
