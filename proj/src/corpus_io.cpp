#include "mill/corpus_io.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace mill {

namespace {

using nlohmann::json;

Article parse_article_line(const std::string& line, bool allow_empty_body) {
  json j = json::parse(line);  // throws json::parse_error
  if (!j.is_object()) throw DataError("record is not an object");
  Article a;
  a.id = j.at("id").get<std::string>();
  if (a.id.empty()) throw DataError("empty id");
  a.lang = parse_lang(j.at("lang").get<std::string>());
  a.date = Date::parse(j.at("date").get<std::string>());
  if (j.contains("title")) a.title = j.at("title").get<std::string>();
  a.body = j.at("body").get<std::string>();
  if (a.body.empty() && !allow_empty_body)
    throw DataError("empty body (pass allow_empty_body to accept)");
  return a;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write: " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read: " + path.string());
  return in;
}

}  // namespace

ArticleCollection load_articles(const std::filesystem::path& path,
                                const LoadOptions& opts, LoadReport* report) {
  std::ifstream in = open_in(path);
  ArticleCollection collection;
  LoadReport local;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      collection.add(parse_article_line(line, opts.allow_empty_body));
      ++local.loaded;
    } catch (const std::exception& e) {
      if (!opts.lenient)
        throw DataError(path.string() + ":" + std::to_string(lineno) + ": " +
                        e.what());
      ++local.skipped;
    }
  }
  if (report) *report = local;
  return collection;
}

long write_articles(const ArticleCollection& collection,
                    const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  long n = 0;
  for (const auto& [id, a] : collection.all()) {
    json j;
    j["id"] = a.id;
    j["lang"] = std::string(lang_code(a.lang));
    j["date"] = a.date.to_string();
    if (!a.title.empty()) j["title"] = a.title;
    j["body"] = a.body;
    out << j.dump() << '\n';
    ++n;
  }
  return n;
}

std::string escape_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 >= text.size()) {
      out.push_back(text[i]);
      continue;
    }
    switch (text[++i]) {
      case '\\': out.push_back('\\'); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      default:
        out.push_back('\\');
        out.push_back(text[i]);
    }
  }
  return out;
}

long write_pairs(std::vector<OutputPair> pairs, const std::filesystem::path& path) {
  std::sort(pairs.begin(), pairs.end(), [](const OutputPair& a, const OutputPair& b) {
    if (a.src_id != b.src_id) return a.src_id < b.src_id;
    if (a.src_start != b.src_start) return a.src_start < b.src_start;
    return a.tgt_id < b.tgt_id;
  });
  std::ofstream out = open_out(path);
  char score[32];
  for (const OutputPair& p : pairs) {
    std::snprintf(score, sizeof score, "%.6f", p.score);
    out << escape_field(p.src_text) << '\t' << escape_field(p.tgt_text) << '\t'
        << score << '\t' << escape_field(p.src_id) << '\t'
        << escape_field(p.tgt_id) << '\n';
  }
  return static_cast<long>(pairs.size());
}

std::vector<OutputPair> read_pairs(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::vector<OutputPair> pairs;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      fields.push_back(line.substr(pos, tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (fields.size() != 5)
      throw DataError(path.string() + ":" + std::to_string(lineno) +
                      ": expected 5 fields, got " + std::to_string(fields.size()));
    OutputPair p;
    p.src_text = unescape_field(fields[0]);
    p.tgt_text = unescape_field(fields[1]);
    p.score = std::stod(fields[2]);
    p.src_id = unescape_field(fields[3]);
    p.tgt_id = unescape_field(fields[4]);
    pairs.push_back(std::move(p));
  }
  return pairs;
}

void write_bitext(const std::vector<std::pair<std::string, std::string>>& pairs,
                  const std::filesystem::path& dir, const std::string& a,
                  const std::string& b) {
  std::filesystem::create_directories(dir);
  std::ofstream fa = open_out(dir / ("train." + a));
  std::ofstream fb = open_out(dir / ("train." + b));
  for (const auto& [ta, tb] : pairs) {
    fa << escape_field(ta) << '\n';
    fb << escape_field(tb) << '\n';
  }
}

void write_sentences(const std::vector<SentenceRow>& rows,
                     const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  for (const SentenceRow& r : rows)
    out << escape_field(r.article_id) << '\t' << r.index << '\t'
        << escape_field(r.text) << '\n';
}

}  // namespace mill
