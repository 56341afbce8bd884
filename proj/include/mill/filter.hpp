#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mill/corpus_io.hpp"
#include "mill/lang.hpp"

namespace mill {

struct FilterPolicy {
  double min_len_ratio = 1.0 / 3.0;  // src tokens / tgt tokens lower bound
  double max_len_ratio = 3.0;
  double min_script_purity = 0.5;
  int min_tokens = 1;
  int max_tokens = 200;
  bool drop_url_like = true;
  bool drop_numeric_only = true;
};

enum class DropReason {
  ok,
  ratio,
  script,
  url,
  numeric,
  too_short,
  too_long,
  duplicate,
};

std::string_view drop_reason_name(DropReason reason);

struct FilterDecision {
  bool keep = true;
  DropReason reason = DropReason::ok;
};

// Checks run in a fixed order (length bounds, numeric, url, script, ratio);
// the first failure names the reason. Duplicates are not a per-pair
// property and are handled by run_filter.
FilterDecision apply_policy(std::string_view src_text, std::string_view tgt_text,
                            Lang src_lang, Lang tgt_lang,
                            const FilterPolicy& policy);

struct FilterReport {
  std::map<DropReason, long> counts;  // every reason present, ok included

  long dropped() const;
  std::string to_text() const;  // key-value block, one reason per line
};

// Keeps pairs in order, dropping policy violations and then exact
// duplicates of (normalized src, normalized tgt), first occurrence wins.
std::pair<std::vector<OutputPair>, FilterReport> run_filter(
    const std::vector<OutputPair>& pairs, Lang src_lang, Lang tgt_lang,
    const FilterPolicy& policy);

}  // namespace mill
