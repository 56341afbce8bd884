// bitextmill: mines sentence-aligned parallel corpora out of per-language
// article collections. One subcommand per pipeline stage plus `run`, which
// chains them all under a single config.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mill/pipeline.hpp"
#include "mill/segment.hpp"
#include "mill/stats.hpp"

namespace {

using namespace mill;

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read: " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<DocumentPair> read_doc_pairs(const std::filesystem::path& path) {
  std::vector<DocumentPair> pairs;
  for (const std::string& line : read_lines(path)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      f.push_back(line.substr(pos, tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (f.size() != 4) throw DataError("doc-pair rows want 4 fields: " + path.string());
    pairs.push_back(DocumentPair{unescape_field(f[0]), unescape_field(f[1]),
                                 std::stod(f[2]), std::stol(f[3])});
  }
  return pairs;
}

TermSpace parse_term_space(const std::string& s) {
  if (s == "word") return TermSpace::word;
  if (s == "subword") return TermSpace::subword;
  throw DataError("token space wants word or subword, got '" + s + "'");
}

struct SegmentArgs {
  std::string lang;
  std::string input;
  std::string output;
  bool lenient = false;
  bool allow_empty_body = false;
};

int cmd_segment(const SegmentArgs& args) {
  Lang lang = parse_lang(args.lang);
  LoadOptions opts{args.lenient, args.allow_empty_body};
  ArticleCollection articles = load_articles(args.input, opts);
  std::vector<SentenceRow> rows;
  for (const auto& [id, article] : articles.all()) {
    if (article.lang != lang)
      throw DataError("article " + id + " is not tagged " + args.lang);
    std::vector<std::string> sentences = split_sentences(article.body, lang);
    for (size_t i = 0; i < sentences.size(); ++i)
      rows.push_back(SentenceRow{id, static_cast<int>(i), sentences[i]});
  }
  write_sentences(rows, args.output);
  std::fprintf(stderr, "segment: %zu articles, %zu sentences\n", articles.size(),
               rows.size());
  return 0;
}

struct TrainSubwordArgs {
  std::string lang;
  std::string input;
  std::string output;
  int vocab_size = 4000;
};

int cmd_train_subword(const TrainSubwordArgs& args) {
  std::vector<std::string> sentences = read_lines(args.input);
  SubwordModel model = train_subword(sentences, args.vocab_size, parse_lang(args.lang));
  save_subword(model, args.output);
  std::fprintf(stderr, "train-subword: %zu merges, %zu symbols\n",
               model.merges.size(), model.vocab.size());
  return 0;
}

struct DocAlignArgs {
  std::string src;
  std::string src_lang;
  std::string en;
  std::string translator = "identity";
  std::string mode = "tfidf";
  std::string term_space = "subword";
  std::string subword_model;
  std::string output;
  std::string ambiguous_out;
  DocAlignConfig cfg;
};

int cmd_doc_align(const DocAlignArgs& args) {
  ArticleCollection src = load_articles(args.src);
  ArticleCollection en = load_articles(args.en);
  std::vector<DocumentPair> pairs;
  if (args.mode == "date") {
    DateAlignResult result = align_by_date(src, en);
    pairs = std::move(result.pairs);
    if (!args.ambiguous_out.empty()) {
      std::ofstream out(args.ambiguous_out, std::ios::binary);
      for (const DateAmbiguity& a : result.ambiguous)
        out << a.date.to_string() << '\t' << a.src_count << '\t' << a.tgt_count
            << '\n';
    }
  } else if (args.mode == "tfidf") {
    DocAlignConfig cfg = args.cfg;
    cfg.term_space = parse_term_space(args.term_space);
    SubwordModel model;
    if (cfg.term_space == TermSpace::subword) {
      if (args.subword_model.empty())
        throw DataError("tf-idf in subword space needs --subword-model");
      model = load_subword(args.subword_model);
    }
    std::unique_ptr<Translator> translator = make_translator(args.translator);
    DocAlignResult result = align_documents(src, en, *translator, cfg, &model);
    pairs = std::move(result.pairs);
    if (result.skipped_sentences)
      std::fprintf(stderr, "doc-align: %ld sentences skipped by the translator\n",
                   result.skipped_sentences);
  } else {
    throw DataError("mode wants tfidf or date, got '" + args.mode + "'");
  }
  std::ofstream out(args.output, std::ios::binary);
  if (!out) throw DataError("cannot write: " + args.output);
  for (const DocumentPair& p : pairs) {
    char sim[32];
    std::snprintf(sim, sizeof sim, "%.6f", p.similarity);
    out << escape_field(p.src_id) << '\t' << escape_field(p.tgt_id) << '\t' << sim
        << '\t' << p.date_delta_days << '\n';
  }
  std::fprintf(stderr, "doc-align: %zu document pairs\n", pairs.size());
  return 0;
}

struct SentAlignArgs {
  std::string src;
  std::string src_lang;
  std::string en;
  std::string doc_pairs;
  std::string translator = "identity";
  std::string token_space = "word";
  std::string subword_model;
  std::string output;
  AlignConfig cfg;
};

int cmd_sent_align(const SentAlignArgs& args) {
  ArticleCollection src = load_articles(args.src);
  ArticleCollection en = load_articles(args.en);
  std::vector<DocumentPair> doc_pairs = read_doc_pairs(args.doc_pairs);
  std::unique_ptr<Translator> translator = make_translator(args.translator);
  SubwordModel model;
  Tokenizer tokenize = word_tokenizer();
  if (parse_term_space(args.token_space) == TermSpace::subword) {
    if (args.subword_model.empty())
      throw DataError("subword token space needs --subword-model");
    model = load_subword(args.subword_model);
    tokenize = subword_tokenizer(model);
  }

  std::vector<OutputPair> rows;
  long failed = 0;
  for (const DocumentPair& dp : doc_pairs) {
    const Article* a = src.find(dp.src_id);
    const Article* b = en.find(dp.tgt_id);
    if (!a) throw DataError("doc pair names unknown source article " + dp.src_id);
    if (!b) throw DataError("doc pair names unknown target article " + dp.tgt_id);
    std::vector<std::string> src_sentences = split_sentences(a->body, a->lang);
    std::vector<std::string> tgt_sentences = split_sentences(b->body, b->lang);
    for (const SentencePair& sp : align_sentence_level(dp, *a, *b, *translator,
                                                       args.cfg, tokenize, &failed)) {
      OutputPair op;
      op.src_text = join_span(src_sentences, sp.src_span);
      op.tgt_text = join_span(tgt_sentences, sp.tgt_span);
      op.score = sp.score;
      op.src_id = sp.src_article;
      op.tgt_id = sp.tgt_article;
      op.src_start = sp.src_span.first;
      rows.push_back(std::move(op));
    }
  }
  long written = write_pairs(rows, args.output);
  std::fprintf(stderr, "sent-align: %ld sentence pairs (%ld failed translations)\n",
               written, failed);
  return 0;
}

struct FilterArgs {
  std::string input;
  std::string src_lang;
  std::string tgt_lang = "en";
  std::string output;
  std::string report_out;
  FilterPolicy policy;
};

int cmd_filter(const FilterArgs& args) {
  std::vector<OutputPair> pairs = read_pairs(args.input);
  auto [kept, report] =
      run_filter(pairs, parse_lang(args.src_lang), parse_lang(args.tgt_lang),
                 args.policy);
  write_pairs(kept, args.output);
  if (!args.report_out.empty()) {
    std::ofstream out(args.report_out, std::ios::binary);
    out << report.to_text();
  }
  std::fputs(report.to_text().c_str(), stderr);
  return 0;
}

struct PivotArgs {
  std::vector<std::string> pair_files;  // lang=path
  std::string grid_out;
  std::string bitext_dir;
  std::string collisions = "keep_first";
};

int cmd_pivot(const PivotArgs& args) {
  std::map<Lang, std::vector<std::pair<std::string, std::string>>> by_lang;
  for (const std::string& spec : args.pair_files) {
    size_t eq = spec.find('=');
    if (eq == std::string::npos)
      throw DataError("--pairs wants lang=path, got '" + spec + "'");
    Lang lang = parse_lang(spec.substr(0, eq));
    for (const OutputPair& p : read_pairs(spec.substr(eq + 1)))
      by_lang[lang].emplace_back(p.tgt_text, p.src_text);  // tgt side is en
  }
  CollisionPolicy policy;
  if (args.collisions == "keep_first") policy = CollisionPolicy::keep_first;
  else if (args.collisions == "drop_all") policy = CollisionPolicy::drop_all;
  else throw DataError("--collisions wants keep_first or drop_all");

  CompileResult compiled = compile_records(by_lang, policy);
  GridCounts grid = grid_counts(compiled.records);
  if (!args.grid_out.empty()) {
    std::ofstream out(args.grid_out, std::ios::binary);
    out << grid.to_tsv();
  } else {
    std::fputs(grid.to_tsv().c_str(), stdout);
  }
  if (!args.bitext_dir.empty()) {
    for (size_t i = 0; i < kAllLangs.size(); ++i) {
      for (size_t j = i + 1; j < kAllLangs.size(); ++j) {
        Lang a = kAllLangs[i], b = kAllLangs[j];
        if (grid.at(a, b) == 0) continue;
        std::string dir = std::string(lang_code(a)) + "-" + std::string(lang_code(b));
        write_bitext(extract_bitext(compiled.records, a, b),
                     std::filesystem::path(args.bitext_dir) / dir,
                     std::string(lang_code(a)), std::string(lang_code(b)));
      }
    }
  }
  std::fprintf(stderr, "pivot: %zu records, %ld collisions\n",
               compiled.records.size(), compiled.collisions);
  return 0;
}

struct StatsArgs {
  std::string lang;
  std::string train;
  std::string test;
};

int cmd_stats(const StatsArgs& args) {
  Lang lang = parse_lang(args.lang);
  Vocabulary train = build_vocab(read_lines(args.train), lang);
  std::printf("train_types\t%zu\ntrain_tokens\t%ld\n", train.types.size(),
              train.token_total);
  if (!args.test.empty()) {
    Vocabulary test = build_vocab(read_lines(args.test), lang);
    std::printf("test_types\t%zu\ntest_tokens\t%ld\n", test.types.size(),
                test.token_total);
    std::printf("oov_rate\t%.1f%%\n", oov_rate(train, test));
  }
  return 0;
}

struct BleuArgs {
  std::string hyp;
  std::string ref;
  int max_n = 4;
};

int cmd_bleu_score(const BleuArgs& args) {
  std::vector<std::string> hyp_lines = read_lines(args.hyp);
  std::vector<std::string> ref_lines = read_lines(args.ref);
  if (hyp_lines.size() != ref_lines.size())
    throw DataError("bleu-score: line counts differ (" +
                    std::to_string(hyp_lines.size()) + " vs " +
                    std::to_string(ref_lines.size()) + ")");
  std::vector<std::pair<TokenList, TokenList>> pairs;
  pairs.reserve(hyp_lines.size());
  for (size_t i = 0; i < hyp_lines.size(); ++i)
    pairs.emplace_back(word_tokenize(hyp_lines[i]), word_tokenize(ref_lines[i]));
  BleuScore score = corpus_bleu(pairs, args.max_n);
  std::printf("BLEU = %.2f\n", score.value * 100.0);
  for (size_t n = 0; n < score.precisions.size(); ++n) {
    const Fraction& p = score.precisions[n];
    if (p.total == 0)
      std::printf("p%zu = undefined (no %zu-grams)\n", n + 1, n + 1);
    else
      std::printf("p%zu = %.4f (%ld/%ld)\n", n + 1,
                  static_cast<double>(p.matches) / static_cast<double>(p.total),
                  p.matches, p.total);
  }
  std::printf("BP = %.4f\nhyp_len = %ld\nref_len = %ld\n", score.brevity_penalty,
              score.hyp_len, score.ref_len);
  return 0;
}

struct AuditArgs {
  std::string input;
  std::string output;
  long n = 100;
  unsigned long long seed = 1;
};

int cmd_audit_sample(const AuditArgs& args) {
  std::vector<OutputPair> pairs = read_pairs(args.input);
  auto sample = audit_sample(pairs, args.n, args.seed);
  write_audit_tsv(sample, args.output);
  std::fprintf(stderr, "audit-sample: %ld of %zu pairs\n", args.n, pairs.size());
  return 0;
}

struct RunArgs {
  std::string config;
  KeyValues overrides;
};

int cmd_run(const RunArgs& args) {
  KeyValues kv;
  if (!args.config.empty()) kv = parse_config_file(args.config);
  kv = merge_keyvalues(kv, args.overrides);
  PipelineConfig cfg = make_pipeline_config(kv);
  nlohmann::json manifest = run_pipeline(cfg);
  std::fprintf(stderr, "run: wrote %zu artifacts under %s\n",
               manifest["outputs"].size(), cfg.output_dir.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multilingual parallel corpus miner"};
  app.require_subcommand(1);

  SegmentArgs seg;
  auto* c_seg = app.add_subcommand("segment", "split article bodies into sentences");
  c_seg->add_option("--lang", seg.lang, "language code")->required();
  c_seg->add_option("--input", seg.input, "article JSONL")->required();
  c_seg->add_option("--output", seg.output, "sentence TSV out")->required();
  c_seg->add_flag("--lenient", seg.lenient, "skip bad records instead of failing");
  c_seg->add_flag("--allow-empty-body", seg.allow_empty_body,
                  "accept articles with an empty body");

  TrainSubwordArgs tsw;
  auto* c_tsw = app.add_subcommand("train-subword", "learn a subword vocabulary");
  c_tsw->add_option("--lang", tsw.lang, "language code")->required();
  c_tsw->add_option("--input", tsw.input, "text file, one sentence per line")
      ->required();
  c_tsw->add_option("--output", tsw.output, "model file out")->required();
  c_tsw->add_option("--vocab-size", tsw.vocab_size, "total symbol budget");

  DocAlignArgs da;
  auto* c_da = app.add_subcommand("doc-align", "align articles to English articles");
  c_da->add_option("--src", da.src, "source article JSONL")->required();
  c_da->add_option("--en", da.en, "English article JSONL")->required();
  c_da->add_option("--output", da.output, "document pair TSV out")->required();
  c_da->add_option("--translator", da.translator,
                   "identity | table:PATH | exec:COMMAND");
  c_da->add_option("--mode", da.mode, "tfidf | date");
  c_da->add_option("--window-days", da.cfg.window_days, "posted-date window");
  c_da->add_option("--min-similarity", da.cfg.min_similarity, "cosine floor");
  c_da->add_option("--term-space", da.term_space, "word | subword");
  c_da->add_option("--subword-model", da.subword_model, "English subword model");
  c_da->add_option("--ambiguous-out", da.ambiguous_out,
                   "ambiguity report for date mode");

  SentAlignArgs sa;
  auto* c_sa = app.add_subcommand("sent-align", "align sentences inside document pairs");
  c_sa->add_option("--src", sa.src, "source article JSONL")->required();
  c_sa->add_option("--en", sa.en, "English article JSONL")->required();
  c_sa->add_option("--doc-pairs", sa.doc_pairs, "document pair TSV")->required();
  c_sa->add_option("--output", sa.output, "sentence pair TSV out")->required();
  c_sa->add_option("--translator", sa.translator,
                   "identity | table:PATH | exec:COMMAND");
  c_sa->add_option("--anchor-threshold", sa.cfg.anchor_threshold,
                   "minimum anchor BLEU");
  c_sa->add_option("--max-merge", sa.cfg.max_merge, "largest merged span");
  c_sa->add_option("--bleu-max-n", sa.cfg.bleu_max_n, "BLEU order for alignment");
  c_sa->add_option("--token-space", sa.token_space, "word | subword");
  c_sa->add_option("--subword-model", sa.subword_model, "English subword model");

  FilterArgs fl;
  auto* c_fl = app.add_subcommand("filter", "drop noisy aligned pairs");
  c_fl->add_option("--input", fl.input, "sentence pair TSV")->required();
  c_fl->add_option("--src-lang", fl.src_lang, "source language code")->required();
  c_fl->add_option("--tgt-lang", fl.tgt_lang, "target language code");
  c_fl->add_option("--output", fl.output, "kept pairs TSV out")->required();
  c_fl->add_option("--report", fl.report_out, "drop-count report out");
  c_fl->add_option("--min-ratio", fl.policy.min_len_ratio, "length ratio floor");
  c_fl->add_option("--max-ratio", fl.policy.max_len_ratio, "length ratio cap");
  c_fl->add_option("--min-script-purity", fl.policy.min_script_purity,
                   "expected-script fraction floor");
  c_fl->add_option("--min-tokens", fl.policy.min_tokens, "shortest side floor");
  c_fl->add_option("--max-tokens", fl.policy.max_tokens, "longest side cap");
  c_fl->add_flag("!--keep-url", fl.policy.drop_url_like, "keep URL-only pairs");
  c_fl->add_flag("!--keep-numeric", fl.policy.drop_numeric_only,
                 "keep number-only pairs");

  PivotArgs pv;
  auto* c_pv = app.add_subcommand("pivot", "compile xx-yy pairs through English");
  c_pv->add_option("--pairs", pv.pair_files, "lang=filtered.tsv (repeatable)")
      ->required();
  c_pv->add_option("--grid", pv.grid_out, "grid TSV out (default stdout)");
  c_pv->add_option("--bitext-dir", pv.bitext_dir, "export line-aligned bitext here");
  c_pv->add_option("--collisions", pv.collisions, "keep_first | drop_all");

  StatsArgs st;
  auto* c_st = app.add_subcommand("stats", "vocabulary and OOV figures");
  c_st->add_option("--lang", st.lang, "language code")->required();
  c_st->add_option("--train", st.train, "text file, one sentence per line")
      ->required();
  c_st->add_option("--test", st.test, "optional test text for the OOV rate");

  BleuArgs bl;
  auto* c_bl = app.add_subcommand("bleu-score", "corpus BLEU of two line-aligned files");
  c_bl->add_option("--hyp", bl.hyp, "hypothesis file")->required();
  c_bl->add_option("--ref", bl.ref, "reference file")->required();
  c_bl->add_option("--max-n", bl.max_n, "highest n-gram order");

  AuditArgs au;
  auto* c_au = app.add_subcommand("audit-sample", "draw a manual-review sample");
  c_au->add_option("--input", au.input, "sentence pair TSV")->required();
  c_au->add_option("--output", au.output, "review TSV out")->required();
  c_au->add_option("-n,--n", au.n, "sample size");
  c_au->add_option("--seed", au.seed, "sampling seed");

  RunArgs run;
  auto* c_run = app.add_subcommand("run", "run the whole pipeline from a config");
  c_run->add_option("--config", run.config, "key = value config file");
  std::string rv_languages, rv_output, rv_translator, rv_mode, rv_term_space,
      rv_token_space;
  std::vector<std::string> rv_inputs;
  long rv_window = 0, rv_max_merge = 0, rv_bleu_n = 0, rv_vocab = 0, rv_jobs = 0,
       rv_seed = 0, rv_min_tokens = 0, rv_max_tokens = 0, rv_audit = 0;
  double rv_min_sim = 0, rv_threshold = 0, rv_min_ratio = 0, rv_max_ratio = 0,
         rv_purity = 0;
  bool rv_lenient = false;
  auto* o_langs = c_run->add_option("--languages", rv_languages,
                                    "comma-separated non-English codes");
  auto* o_inputs =
      c_run->add_option("--input", rv_inputs, "lang=articles.jsonl (repeatable)");
  auto* o_out = c_run->add_option("--output-dir", rv_output, "artifact directory");
  auto* o_tr = c_run->add_option("--translator", rv_translator,
                                 "identity | table:PATH | exec:COMMAND");
  auto* o_mode = c_run->add_option("--mode", rv_mode, "tfidf | date");
  auto* o_window = c_run->add_option("--window-days", rv_window, "date window");
  auto* o_minsim = c_run->add_option("--min-similarity", rv_min_sim, "cosine floor");
  auto* o_tspace = c_run->add_option("--term-space", rv_term_space,
                                     "doc-align term space: word | subword");
  auto* o_thr =
      c_run->add_option("--anchor-threshold", rv_threshold, "minimum anchor BLEU");
  auto* o_merge = c_run->add_option("--max-merge", rv_max_merge, "largest merge");
  auto* o_bleun = c_run->add_option("--bleu-max-n", rv_bleu_n, "alignment BLEU order");
  auto* o_kspace = c_run->add_option("--token-space", rv_token_space,
                                     "alignment token space: word | subword");
  auto* o_vocab = c_run->add_option("--vocab-size", rv_vocab, "subword budget");
  auto* o_minr = c_run->add_option("--min-ratio", rv_min_ratio, "length ratio floor");
  auto* o_maxr = c_run->add_option("--max-ratio", rv_max_ratio, "length ratio cap");
  auto* o_pur = c_run->add_option("--min-script-purity", rv_purity, "purity floor");
  auto* o_mint = c_run->add_option("--min-tokens", rv_min_tokens, "shortest side");
  auto* o_maxt = c_run->add_option("--max-tokens", rv_max_tokens, "longest side");
  auto* o_audit = c_run->add_option("--audit-size", rv_audit, "review sample size");
  auto* o_seed = c_run->add_option("--seed", rv_seed, "pipeline seed");
  auto* o_jobs = c_run->add_option("--jobs", rv_jobs, "worker threads");
  auto* o_len = c_run->add_flag("--lenient", rv_lenient, "skip bad input records");

  auto collect_run_overrides = [&] {
    auto put = [&](const CLI::Option* opt, const std::string& key,
                   const std::string& value) {
      if (opt->count() > 0) run.overrides[key] = value;
    };
    put(o_langs, "languages", rv_languages);
    for (size_t i = 0; i < rv_inputs.size(); ++i) {
      size_t eq = rv_inputs[i].find('=');
      if (eq == std::string::npos)
        throw DataError("--input wants lang=path, got '" + rv_inputs[i] + "'");
      run.overrides["input." + rv_inputs[i].substr(0, eq)] =
          rv_inputs[i].substr(eq + 1);
    }
    put(o_out, "output_dir", rv_output);
    put(o_tr, "translator", rv_translator);
    put(o_mode, "mode", rv_mode);
    put(o_window, "docalign.window_days", std::to_string(rv_window));
    put(o_minsim, "docalign.min_similarity", std::to_string(rv_min_sim));
    put(o_tspace, "docalign.term_space", rv_term_space);
    put(o_thr, "align.anchor_threshold", std::to_string(rv_threshold));
    put(o_merge, "align.max_merge", std::to_string(rv_max_merge));
    put(o_bleun, "align.bleu_max_n", std::to_string(rv_bleu_n));
    put(o_kspace, "align.token_space", rv_token_space);
    put(o_vocab, "subword.vocab_size", std::to_string(rv_vocab));
    put(o_minr, "filter.min_ratio", std::to_string(rv_min_ratio));
    put(o_maxr, "filter.max_ratio", std::to_string(rv_max_ratio));
    put(o_pur, "filter.min_script_purity", std::to_string(rv_purity));
    put(o_mint, "filter.min_tokens", std::to_string(rv_min_tokens));
    put(o_maxt, "filter.max_tokens", std::to_string(rv_max_tokens));
    put(o_audit, "audit.sample_size", std::to_string(rv_audit));
    put(o_seed, "seed", std::to_string(rv_seed));
    put(o_jobs, "jobs", std::to_string(rv_jobs));
    put(o_len, "lenient", rv_lenient ? "true" : "false");
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*c_seg) return cmd_segment(seg);
    if (*c_tsw) return cmd_train_subword(tsw);
    if (*c_da) return cmd_doc_align(da);
    if (*c_sa) return cmd_sent_align(sa);
    if (*c_fl) return cmd_filter(fl);
    if (*c_pv) return cmd_pivot(pv);
    if (*c_st) return cmd_stats(st);
    if (*c_bl) return cmd_bleu_score(bl);
    if (*c_au) return cmd_audit_sample(au);
    if (*c_run) {
      collect_run_overrides();
      return cmd_run(run);
    }
  } catch (const StageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const DataError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 1;
}
