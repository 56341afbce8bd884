#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mill/article.hpp"

namespace mill {

struct LoadOptions {
  bool lenient = false;          // downgrade record errors to skipped+counted
  bool allow_empty_body = false;
};

struct LoadReport {
  long loaded = 0;
  long skipped = 0;  // lenient mode only
};

// Article JSONL: one object per line with id/lang/date/body and an optional
// title. Malformed lines, unknown language codes, bad dates, empty bodies
// and duplicate ids are hard errors unless opts.lenient is set.
ArticleCollection load_articles(const std::filesystem::path& path,
                                const LoadOptions& opts = {},
                                LoadReport* report = nullptr);

long write_articles(const ArticleCollection& collection,
                    const std::filesystem::path& path);

// A sentence pair with its texts resolved, ready for the parallel TSV.
struct OutputPair {
  std::string src_text;
  std::string tgt_text;
  double score = 0.0;
  std::string src_id;
  std::string tgt_id;
  int src_start = 0;  // source span start, used only for ordering
};

// TSV field escaping: backslash, tab and newline become \\ \t \n.
std::string escape_field(std::string_view text);
std::string unescape_field(std::string_view text);

// Writes `src<TAB>tgt<TAB>score<TAB>src_id<TAB>tgt_id` sorted by
// (src_id, src_start); returns the number of lines.
long write_pairs(std::vector<OutputPair> pairs, const std::filesystem::path& path);

std::vector<OutputPair> read_pairs(const std::filesystem::path& path);

// Line-aligned bitext: train.<a> / train.<b> under dir, line i of each file
// being a translation pair.
void write_bitext(const std::vector<std::pair<std::string, std::string>>& pairs,
                  const std::filesystem::path& dir, const std::string& a,
                  const std::string& b);

// Sentence dump rows: `article_id<TAB>index<TAB>text` (escaped like the
// parallel TSV).
struct SentenceRow {
  std::string article_id;
  int index;
  std::string text;
};
void write_sentences(const std::vector<SentenceRow>& rows,
                     const std::filesystem::path& path);

}  // namespace mill
