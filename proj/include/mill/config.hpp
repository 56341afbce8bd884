#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mill/docalign.hpp"
#include "mill/filter.hpp"
#include "mill/pivot.hpp"
#include "mill/sentalign.hpp"

namespace mill {

// Flat `key = value` pairs with dotted section keys; '#' starts a comment.
// Every key mirrors a CLI flag and CLI flags win on conflict.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_config_file(const std::filesystem::path& path);

// Later maps override earlier ones.
KeyValues merge_keyvalues(const KeyValues& base, const KeyValues& overrides);

enum class DocAlignMode { tfidf, date };

struct PipelineConfig {
  std::map<Lang, std::filesystem::path> inputs;  // must cover en + languages
  std::vector<Lang> languages;                   // non-English, sorted
  std::filesystem::path output_dir;
  std::string translator_spec = "identity";
  DocAlignMode mode = DocAlignMode::tfidf;
  DocAlignConfig docalign;
  AlignConfig align;
  TermSpace align_tokens = TermSpace::subword;
  FilterPolicy filter;
  CollisionPolicy collisions = CollisionPolicy::keep_first;
  int vocab_size = 4000;
  long audit_size = 100;
  unsigned long long seed = 1;
  int jobs = 1;
  bool lenient_load = false;

  // Canonical one-line-per-key rendering, the basis of the config digest.
  std::string canonical() const;
};

// Builds and validates a config from merged key-values. Unknown keys, bad
// values, a missing English input or an empty language set are errors.
PipelineConfig make_pipeline_config(const KeyValues& kv);

}  // namespace mill
