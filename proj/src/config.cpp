#include "mill/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mill {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw DataError("config: " + key + " wants an integer, got '" + value + "'");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw DataError("config: " + key + " wants a number, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw DataError("config: " + key + " wants true/false, got '" + value + "'");
}

}  // namespace

KeyValues parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read config: " + path.string());
  KeyValues kv;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw DataError(path.string() + ":" + std::to_string(lineno) +
                      ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": empty key");
    kv[key] = value;
  }
  return kv;
}

KeyValues merge_keyvalues(const KeyValues& base, const KeyValues& overrides) {
  KeyValues merged = base;
  for (const auto& [k, v] : overrides) merged[k] = v;
  return merged;
}

std::string PipelineConfig::canonical() const {
  std::ostringstream out;
  out << "align.anchor_threshold = " << align.anchor_threshold << '\n'
      << "align.bleu_max_n = " << align.bleu_max_n << '\n'
      << "align.max_merge = " << align.max_merge << '\n'
      << "align.token_space = "
      << (align_tokens == TermSpace::word ? "word" : "subword") << '\n'
      << "audit.sample_size = " << audit_size << '\n'
      << "docalign.min_similarity = " << docalign.min_similarity << '\n'
      << "docalign.term_space = "
      << (docalign.term_space == TermSpace::word ? "word" : "subword") << '\n'
      << "docalign.window_days = " << docalign.window_days << '\n'
      << "filter.drop_numeric = " << (filter.drop_numeric_only ? "true" : "false")
      << '\n'
      << "filter.drop_url = " << (filter.drop_url_like ? "true" : "false") << '\n'
      << "filter.max_ratio = " << filter.max_len_ratio << '\n'
      << "filter.max_tokens = " << filter.max_tokens << '\n'
      << "filter.min_ratio = " << filter.min_len_ratio << '\n'
      << "filter.min_script_purity = " << filter.min_script_purity << '\n'
      << "filter.min_tokens = " << filter.min_tokens << '\n';
  for (const auto& [lang, path] : inputs)
    out << "input." << lang_code(lang) << " = " << path.string() << '\n';
  out << "jobs = " << jobs << '\n';
  out << "languages = ";
  for (size_t i = 0; i < languages.size(); ++i)
    out << (i ? "," : "") << lang_code(languages[i]);
  out << '\n'
      << "lenient = " << (lenient_load ? "true" : "false") << '\n'
      << "mode = " << (mode == DocAlignMode::date ? "date" : "tfidf") << '\n'
      << "output_dir = " << output_dir.string() << '\n'
      << "pivot.collisions = "
      << (collisions == CollisionPolicy::drop_all ? "drop_all" : "keep_first")
      << '\n'
      << "seed = " << seed << '\n'
      << "subword.vocab_size = " << vocab_size << '\n'
      << "translator = " << translator_spec << '\n';
  return out.str();
}

PipelineConfig make_pipeline_config(const KeyValues& kv) {
  PipelineConfig cfg;
  for (const auto& [key, value] : kv) {
    if (key == "languages") {
      cfg.languages.clear();
      std::istringstream ss(value);
      std::string code;
      while (std::getline(ss, code, ','))
        if (!trim(code).empty()) cfg.languages.push_back(parse_lang(trim(code)));
    } else if (key.rfind("input.", 0) == 0) {
      cfg.inputs[parse_lang(key.substr(6))] = value;
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    } else if (key == "translator") {
      cfg.translator_spec = value;
    } else if (key == "mode") {
      if (value == "tfidf") cfg.mode = DocAlignMode::tfidf;
      else if (value == "date") cfg.mode = DocAlignMode::date;
      else throw DataError("config: mode wants tfidf or date, got '" + value + "'");
    } else if (key == "seed") {
      cfg.seed = static_cast<unsigned long long>(parse_long(key, value));
    } else if (key == "jobs") {
      cfg.jobs = static_cast<int>(parse_long(key, value));
    } else if (key == "lenient") {
      cfg.lenient_load = parse_bool(key, value);
    } else if (key == "docalign.window_days") {
      cfg.docalign.window_days = static_cast<int>(parse_long(key, value));
    } else if (key == "docalign.min_similarity") {
      cfg.docalign.min_similarity = parse_double(key, value);
    } else if (key == "docalign.term_space" || key == "align.token_space") {
      TermSpace space;
      if (value == "word") space = TermSpace::word;
      else if (value == "subword") space = TermSpace::subword;
      else throw DataError("config: " + key + " wants word or subword");
      if (key == "docalign.term_space") cfg.docalign.term_space = space;
      else cfg.align_tokens = space;
    } else if (key == "align.anchor_threshold") {
      cfg.align.anchor_threshold = parse_double(key, value);
    } else if (key == "align.max_merge") {
      cfg.align.max_merge = static_cast<int>(parse_long(key, value));
    } else if (key == "align.bleu_max_n") {
      cfg.align.bleu_max_n = static_cast<int>(parse_long(key, value));
    } else if (key == "subword.vocab_size") {
      cfg.vocab_size = static_cast<int>(parse_long(key, value));
    } else if (key == "filter.min_ratio") {
      cfg.filter.min_len_ratio = parse_double(key, value);
    } else if (key == "filter.max_ratio") {
      cfg.filter.max_len_ratio = parse_double(key, value);
    } else if (key == "filter.min_script_purity") {
      cfg.filter.min_script_purity = parse_double(key, value);
    } else if (key == "filter.min_tokens") {
      cfg.filter.min_tokens = static_cast<int>(parse_long(key, value));
    } else if (key == "filter.max_tokens") {
      cfg.filter.max_tokens = static_cast<int>(parse_long(key, value));
    } else if (key == "filter.drop_url") {
      cfg.filter.drop_url_like = parse_bool(key, value);
    } else if (key == "filter.drop_numeric") {
      cfg.filter.drop_numeric_only = parse_bool(key, value);
    } else if (key == "pivot.collisions") {
      if (value == "keep_first") cfg.collisions = CollisionPolicy::keep_first;
      else if (value == "drop_all") cfg.collisions = CollisionPolicy::drop_all;
      else throw DataError("config: pivot.collisions wants keep_first or drop_all");
    } else if (key == "audit.sample_size") {
      cfg.audit_size = parse_long(key, value);
    } else {
      throw DataError("config: unknown key '" + key + "'");
    }
  }

  std::sort(cfg.languages.begin(), cfg.languages.end());
  cfg.languages.erase(std::unique(cfg.languages.begin(), cfg.languages.end()),
                      cfg.languages.end());
  if (cfg.languages.empty())
    throw DataError("config: empty language set");
  for (Lang lang : cfg.languages)
    if (lang == Lang::en)
      throw DataError("config: languages lists the pivot language en");

  if (cfg.output_dir.empty()) throw DataError("config: output_dir not set");
  if (!cfg.inputs.count(Lang::en)) throw DataError("config: input.en not set");
  for (Lang lang : cfg.languages)
    if (!cfg.inputs.count(lang))
      throw DataError(std::string("config: no input for language ") +
                      std::string(lang_code(lang)));
  for (const auto& [lang, path] : cfg.inputs)
    if (!std::filesystem::exists(path))
      throw DataError("config: input does not exist: " + path.string());

  if (cfg.docalign.window_days < 0)
    throw DataError("config: docalign.window_days must be >= 0");
  if (cfg.align.anchor_threshold <= 0 || cfg.align.anchor_threshold > 1)
    throw DataError("config: align.anchor_threshold must be in (0,1]");
  if (cfg.align.max_merge < 1) throw DataError("config: align.max_merge must be >= 1");
  if (cfg.filter.min_len_ratio <= 0 || cfg.filter.min_len_ratio > 1 ||
      cfg.filter.max_len_ratio < 1)
    throw DataError("config: filter ratio bounds want 0 < min <= 1 <= max");
  if (cfg.jobs < 1) throw DataError("config: jobs must be >= 1");
  return cfg;
}

}  // namespace mill
