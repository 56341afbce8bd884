#include "mill/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <thread>

#include "mill/digest.hpp"
#include "mill/segment.hpp"
#include "mill/stats.hpp"

namespace mill {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Serializes translate() so translators that own a single stream can be
// shared across alignment workers. The line protocol is stateless per
// sentence, so call interleaving does not change any result.
class SerializedTranslator : public Translator {
 public:
  explicit SerializedTranslator(Translator& inner) : inner_(inner) {}
  std::optional<std::string> translate(const std::string& sentence, Lang src,
                                       Lang tgt) override {
    std::lock_guard<std::mutex> lock(mutex_);
    return inner_.translate(sentence, src, tgt);
  }
  bool concurrent_safe() const override { return true; }

 private:
  Translator& inner_;
  std::mutex mutex_;
};

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Collects the relative paths the run produces; promote() moves them from
// partial/ to the output root once the whole run has succeeded.
class Staging {
 public:
  explicit Staging(const fs::path& out_dir)
      : out_dir_(out_dir), partial_(out_dir / "partial") {
    fs::create_directories(partial_);
  }

  fs::path stage(const std::string& rel) {
    written_.push_back(rel);
    fs::path p = partial_ / rel;
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    return p;
  }

  const std::vector<std::string>& written() const { return written_; }

  void promote() {
    for (const std::string& rel : written_) {
      fs::path from = partial_ / rel;
      fs::path to = out_dir_ / rel;
      if (to.has_parent_path()) fs::create_directories(to.parent_path());
      fs::remove(to);
      fs::rename(from, to);
    }
    std::error_code ec;
    fs::remove_all(partial_, ec);  // leftovers only on failure paths
  }

 private:
  fs::path out_dir_;
  fs::path partial_;
  std::vector<std::string> written_;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write: " + path.string());
  out << text;
}

struct LangWork {
  ArticleCollection articles;
  std::map<std::string, std::vector<std::string>> sentences;  // by article id
  long sentence_count = 0;
  SubwordModel subword;
  std::vector<DocumentPair> doc_pairs;
  std::vector<OutputPair> aligned;
  std::vector<OutputPair> filtered;
};

std::string pair_tag(Lang lang) {
  return std::string(lang_code(lang)) + "-en";
}

}  // namespace

json run_pipeline(const PipelineConfig& cfg) {
  json manifest;
  manifest["tool"] = "bitextmill";
  manifest["version"] = std::string(kToolVersion);
  manifest["created_at"] = iso_timestamp();
  manifest["config"] = cfg.canonical();
  manifest["config_digest"] = sha256_hex(cfg.canonical());
  json stages = json::object();

  Staging staging(cfg.output_dir);
  auto run_stage = [](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const StageError&) {
      throw;
    } catch (const std::exception& e) {
      throw StageError(name, e.what());
    }
  };

  std::vector<Lang> all_langs = cfg.languages;
  all_langs.insert(all_langs.begin(), Lang::en);

  std::map<Lang, LangWork> work;
  std::unique_ptr<Translator> translator;

  // --- load ---------------------------------------------------------------
  run_stage("load", [&] {
    json counts = json::object();
    json input_meta = json::object();
    for (Lang lang : all_langs) {
      const fs::path& path = cfg.inputs.at(lang);
      LoadOptions opts;
      opts.lenient = cfg.lenient_load;
      LoadReport report;
      work[lang].articles = load_articles(path, opts, &report);
      for (const auto& [id, article] : work[lang].articles.all())
        if (article.lang != lang)
          throw DataError("article " + id + " is tagged " +
                          std::string(lang_code(article.lang)) + " but listed as " +
                          std::string(lang_code(lang)));
      counts[std::string(lang_code(lang))] = {{"articles", report.loaded},
                                              {"skipped", report.skipped}};
      input_meta[std::string(lang_code(lang))] = {
          {"path", path.string()}, {"sha256", sha256_file(path)}};
    }
    stages["load"] = counts;
    manifest["inputs"] = input_meta;
    translator = make_translator(cfg.translator_spec);
  });

  // --- segment --------------------------------------------------------------
  run_stage("segment", [&] {
    json counts = json::object();
    for (Lang lang : all_langs) {
      LangWork& w = work[lang];
      std::vector<SentenceRow> rows;
      for (const auto& [id, article] : w.articles.all()) {
        std::vector<std::string> sentences = split_sentences(article.body, lang);
        for (size_t i = 0; i < sentences.size(); ++i)
          rows.push_back(SentenceRow{id, static_cast<int>(i), sentences[i]});
        w.sentence_count += static_cast<long>(sentences.size());
        w.sentences.emplace(id, std::move(sentences));
      }
      write_sentences(rows, staging.stage("sentences." +
                                          std::string(lang_code(lang)) + ".tsv"));
      counts[std::string(lang_code(lang))] = w.sentence_count;
    }
    stages["segment"] = counts;
  });

  // --- subword ---------------------------------------------------------------
  run_stage("subword", [&] {
    json counts = json::object();
    for (Lang lang : all_langs) {
      LangWork& w = work[lang];
      std::vector<std::string> corpus;
      corpus.reserve(static_cast<size_t>(w.sentence_count));
      for (const auto& [id, sentences] : w.sentences)
        corpus.insert(corpus.end(), sentences.begin(), sentences.end());
      if (corpus.empty())
        throw DataError(std::string("no sentences for ") +
                        std::string(lang_code(lang)));
      w.subword = train_subword(corpus, cfg.vocab_size, lang);
      save_subword(w.subword, staging.stage("subword." +
                                            std::string(lang_code(lang)) + ".model"));
      counts[std::string(lang_code(lang))] = {
          {"merges", static_cast<long>(w.subword.merges.size())},
          {"symbols", static_cast<long>(w.subword.vocab.size())}};
    }
    stages["subword"] = counts;
  });

  // --- docalign ----------------------------------------------------------------
  run_stage("docalign", [&] {
    json counts = json::object();
    for (Lang lang : cfg.languages) {
      LangWork& w = work[lang];
      json entry;
      if (cfg.mode == DocAlignMode::tfidf) {
        DocAlignResult result =
            align_documents(w.articles, work[Lang::en].articles, *translator,
                            cfg.docalign, &work[Lang::en].subword);
        w.doc_pairs = std::move(result.pairs);
        entry = {{"pairs", static_cast<long>(w.doc_pairs.size())},
                 {"skipped_sentences", result.skipped_sentences},
                 {"unmatched_sources", result.unmatched_sources}};
      } else {
        DateAlignResult result = align_by_date(w.articles, work[Lang::en].articles);
        w.doc_pairs = std::move(result.pairs);
        std::string ambiguous;
        for (const DateAmbiguity& a : result.ambiguous)
          ambiguous += a.date.to_string() + '\t' + std::to_string(a.src_count) +
                       '\t' + std::to_string(a.tgt_count) + '\n';
        write_text(staging.stage("ambiguous_dates." + pair_tag(lang) + ".tsv"),
                   ambiguous);
        entry = {{"pairs", static_cast<long>(w.doc_pairs.size())},
                 {"ambiguous_dates", static_cast<long>(result.ambiguous.size())}};
      }
      std::string tsv;
      for (const DocumentPair& p : w.doc_pairs) {
        char sim[32];
        std::snprintf(sim, sizeof sim, "%.6f", p.similarity);
        tsv += escape_field(p.src_id) + '\t' + escape_field(p.tgt_id) + '\t' +
               sim + '\t' + std::to_string(p.date_delta_days) + '\n';
      }
      write_text(staging.stage("doc_pairs." + pair_tag(lang) + ".tsv"), tsv);
      counts[std::string(lang_code(lang))] = entry;
    }
    stages["docalign"] = counts;
  });

  // --- sentalign ------------------------------------------------------------
  run_stage("sentalign", [&] {
    SerializedTranslator serialized(*translator);
    Translator& shared = (cfg.jobs > 1 && !translator->concurrent_safe())
                             ? static_cast<Translator&>(serialized)
                             : *translator;
    json counts = json::object();
    for (Lang lang : cfg.languages) {
      LangWork& w = work[lang];
      const LangWork& en = work[Lang::en];
      Tokenizer tokenize = cfg.align_tokens == TermSpace::word
                               ? word_tokenizer()
                               : subword_tokenizer(en.subword);

      std::vector<std::vector<OutputPair>> results(w.doc_pairs.size());
      std::vector<long> failures(w.doc_pairs.size(), 0);
      std::atomic<size_t> cursor{0};
      auto grind = [&] {
        for (size_t i; (i = cursor.fetch_add(1)) < w.doc_pairs.size();) {
          const DocumentPair& dp = w.doc_pairs[i];
          const Article& src = *w.articles.find(dp.src_id);
          const Article& tgt = *en.articles.find(dp.tgt_id);
          std::vector<SentencePair> pairs = align_sentence_level(
              dp, src, tgt, shared, cfg.align, tokenize, &failures[i]);
          const auto& src_sentences = w.sentences.at(dp.src_id);
          const auto& tgt_sentences = en.sentences.at(dp.tgt_id);
          for (const SentencePair& sp : pairs) {
            OutputPair op;
            op.src_text = join_span(src_sentences, sp.src_span);
            op.tgt_text = join_span(tgt_sentences, sp.tgt_span);
            op.score = sp.score;
            op.src_id = sp.src_article;
            op.tgt_id = sp.tgt_article;
            op.src_start = sp.src_span.first;
            results[i].push_back(std::move(op));
          }
        }
      };
      int jobs = std::max(1, cfg.jobs);
      if (jobs == 1) {
        grind();
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(grind);
        for (std::thread& t : pool) t.join();
      }

      long failed = 0;
      for (size_t i = 0; i < results.size(); ++i) {
        w.aligned.insert(w.aligned.end(), results[i].begin(), results[i].end());
        failed += failures[i];
      }
      write_pairs(w.aligned, staging.stage("pairs." + pair_tag(lang) + ".tsv"));
      counts[std::string(lang_code(lang))] = {
          {"pairs", static_cast<long>(w.aligned.size())},
          {"failed_sentences", failed}};
    }
    stages["sentalign"] = counts;
  });

  // --- filter ---------------------------------------------------------------
  run_stage("filter", [&] {
    json counts = json::object();
    for (Lang lang : cfg.languages) {
      LangWork& w = work[lang];
      // write_pairs sorted the aligned TSV; filter the same canonical order.
      std::sort(w.aligned.begin(), w.aligned.end(),
                [](const OutputPair& a, const OutputPair& b) {
                  if (a.src_id != b.src_id) return a.src_id < b.src_id;
                  if (a.src_start != b.src_start) return a.src_start < b.src_start;
                  return a.tgt_id < b.tgt_id;
                });
      auto [kept, report] = run_filter(w.aligned, lang, Lang::en, cfg.filter);
      w.filtered = std::move(kept);
      write_pairs(w.filtered, staging.stage("filtered." + pair_tag(lang) + ".tsv"));
      write_text(staging.stage("filter_report." + pair_tag(lang) + ".txt"),
                 report.to_text());
      json entry = json::object();
      for (const auto& [reason, count] : report.counts)
        entry[std::string(drop_reason_name(reason))] = count;
      counts[std::string(lang_code(lang))] = entry;
    }
    stages["filter"] = counts;
  });

  // --- pivot ------------------------------------------------------------------
  std::vector<MultiRecord> records;
  run_stage("pivot", [&] {
    std::map<Lang, std::vector<std::pair<std::string, std::string>>> by_lang;
    for (Lang lang : cfg.languages)
      for (const OutputPair& p : work[lang].filtered)
        by_lang[lang].emplace_back(p.tgt_text, p.src_text);  // (en, xx)
    CompileResult compiled = compile_records(by_lang, cfg.collisions);
    records = std::move(compiled.records);
    GridCounts grid = grid_counts(records);
    write_text(staging.stage("grid.tsv"), grid.to_tsv());
    for (size_t i = 0; i < kAllLangs.size(); ++i) {
      for (size_t j = i + 1; j < kAllLangs.size(); ++j) {
        Lang a = kAllLangs[i], b = kAllLangs[j];
        if (grid.at(a, b) == 0) continue;
        auto bitext = extract_bitext(records, a, b);
        std::string dir = std::string(lang_code(a)) + "-" +
                          std::string(lang_code(b));
        fs::path marker = staging.stage("bitext/" + dir + "/train." +
                                        std::string(lang_code(a)));
        staging.stage("bitext/" + dir + "/train." + std::string(lang_code(b)));
        write_bitext(bitext, marker.parent_path(), std::string(lang_code(a)),
                     std::string(lang_code(b)));
      }
    }
    stages["pivot"] = {{"records", static_cast<long>(records.size())},
                       {"collisions", compiled.collisions}};
  });

  // --- stats ------------------------------------------------------------------
  run_stage("stats", [&] {
    CorpusReport report;
    std::vector<std::string> en_texts;
    for (Lang lang : all_langs) {
      LangWork& w = work[lang];
      LangStats s;
      s.articles = static_cast<long>(w.articles.size());
      s.sentences = w.sentence_count;
      s.aligned_to_en = static_cast<long>(w.aligned.size());
      s.filtered = static_cast<long>(w.filtered.size());
      if (lang != Lang::en) {
        std::vector<std::string> texts;
        texts.reserve(w.filtered.size());
        for (const OutputPair& p : w.filtered) {
          texts.push_back(p.src_text);
          en_texts.push_back(p.tgt_text);
        }
        s.vocab_size = static_cast<long>(build_vocab(texts, lang).types.size());
      }
      report.per_lang[lang] = s;
    }
    report.per_lang[Lang::en].vocab_size =
        static_cast<long>(build_vocab(en_texts, Lang::en).types.size());
    write_text(staging.stage("stats.txt"), report.to_text());
    write_text(staging.stage("stats.jsonl"), report.to_jsonl());

    std::vector<OutputPair> pool;
    for (Lang lang : cfg.languages)
      pool.insert(pool.end(), work[lang].filtered.begin(),
                  work[lang].filtered.end());
    long n = std::min<long>(cfg.audit_size, static_cast<long>(pool.size()));
    auto sample = audit_sample(pool, n, cfg.seed);
    write_audit_tsv(sample, staging.stage("audit_sample.tsv"));
    stages["stats"] = {{"audit_sample", n}};
  });

  manifest["stages"] = stages;
  staging.promote();

  json outputs = json::object();
  for (const std::string& rel : staging.written())
    outputs[rel] = sha256_file(cfg.output_dir / rel);
  manifest["outputs"] = outputs;
  write_text(cfg.output_dir / "manifest.json", manifest.dump(2) + "\n");
  return manifest;
}

}  // namespace mill
