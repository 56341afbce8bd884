#include "mill/filter.hpp"

#include <set>
#include <sstream>

#include "mill/bleu.hpp"
#include "mill/pivot.hpp"
#include "mill/script.hpp"
#include "mill/segment.hpp"
#include "mill/utf8.hpp"

namespace mill {

namespace {

bool url_like_token(const std::string& token) {
  return token.find("://") != std::string::npos || token.rfind("www.", 0) == 0;
}

bool punct_only(const std::string& token) {
  for (char32_t cp : utf8::decode(token))
    if (classify_char(cp) != Script::Punct) return false;
  return true;
}

// Digits with optional punctuation: covers "2018", "12-05-2018", "3,18,931".
bool numeric_token(const std::string& token) {
  bool any = false;
  for (char32_t cp : utf8::decode(token)) {
    Script s = classify_char(cp);
    if (s == Script::Digit)
      any = true;
    else if (s != Script::Punct)
      return false;
  }
  return any;
}

// All tokens are URLs or punctuation, with at least one URL.
bool url_only(const TokenList& tokens) {
  bool any = false;
  for (const std::string& t : tokens) {
    if (url_like_token(t))
      any = true;
    else if (!punct_only(t))
      return false;
  }
  return any;
}

// All tokens are numeric or punctuation, with at least one number. Dates
// rendered as numbers fall in here.
bool numeric_only(const TokenList& tokens) {
  bool any = false;
  for (const std::string& t : tokens) {
    if (numeric_token(t))
      any = true;
    else if (!punct_only(t))
      return false;
  }
  return any;
}

}  // namespace

std::string_view drop_reason_name(DropReason reason) {
  switch (reason) {
    case DropReason::ok: return "ok";
    case DropReason::ratio: return "ratio";
    case DropReason::script: return "script";
    case DropReason::url: return "url";
    case DropReason::numeric: return "numeric";
    case DropReason::too_short: return "too_short";
    case DropReason::too_long: return "too_long";
    case DropReason::duplicate: return "duplicate";
  }
  return "?";
}

FilterDecision apply_policy(std::string_view src_text, std::string_view tgt_text,
                            Lang src_lang, Lang tgt_lang,
                            const FilterPolicy& policy) {
  TokenList src = word_tokenize(src_text);
  TokenList tgt = word_tokenize(tgt_text);
  auto drop = [](DropReason r) { return FilterDecision{false, r}; };

  long lo = std::min(src.size(), tgt.size());
  long hi = std::max(src.size(), tgt.size());
  if (lo < policy.min_tokens) return drop(DropReason::too_short);
  if (hi > policy.max_tokens) return drop(DropReason::too_long);
  if (policy.drop_numeric_only && (numeric_only(src) || numeric_only(tgt)))
    return drop(DropReason::numeric);
  if (policy.drop_url_like && (url_only(src) || url_only(tgt)))
    return drop(DropReason::url);
  if (script_purity(src_text, src_lang) < policy.min_script_purity ||
      script_purity(tgt_text, tgt_lang) < policy.min_script_purity)
    return drop(DropReason::script);
  if (src.empty() || tgt.empty()) return drop(DropReason::ratio);
  double ratio = static_cast<double>(src.size()) / static_cast<double>(tgt.size());
  if (ratio < policy.min_len_ratio || ratio > policy.max_len_ratio)
    return drop(DropReason::ratio);
  return FilterDecision{};
}

long FilterReport::dropped() const {
  long total = 0;
  for (const auto& [reason, count] : counts)
    if (reason != DropReason::ok) total += count;
  return total;
}

std::string FilterReport::to_text() const {
  std::ostringstream out;
  for (const auto& [reason, count] : counts)
    out << drop_reason_name(reason) << '\t' << count << '\n';
  return out.str();
}

std::pair<std::vector<OutputPair>, FilterReport> run_filter(
    const std::vector<OutputPair>& pairs, Lang src_lang, Lang tgt_lang,
    const FilterPolicy& policy) {
  FilterReport report;
  for (int r = 0; r <= static_cast<int>(DropReason::duplicate); ++r)
    report.counts[static_cast<DropReason>(r)] = 0;

  std::vector<OutputPair> kept;
  std::set<std::pair<std::string, std::string>> seen;
  for (const OutputPair& p : pairs) {
    FilterDecision d = apply_policy(p.src_text, p.tgt_text, src_lang, tgt_lang, policy);
    if (!d.keep) {
      ++report.counts[d.reason];
      continue;
    }
    if (!seen.emplace(normalize_key(p.src_text), normalize_key(p.tgt_text)).second) {
      ++report.counts[DropReason::duplicate];
      continue;
    }
    ++report.counts[DropReason::ok];
    kept.push_back(p);
  }
  return {std::move(kept), std::move(report)};
}

}  // namespace mill
