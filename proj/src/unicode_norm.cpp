#include "mill/unicode_norm.hpp"

#include <algorithm>

#include "mill/utf8.hpp"

namespace mill {

namespace {

using norm_data::kCcc;
using norm_data::kCccCount;
using norm_data::kComp;
using norm_data::kCompCount;
using norm_data::kDecomp;
using norm_data::kDecompCount;
using norm_data::kDecompPool;

constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

unsigned char ccc(char32_t cp) {
  int lo = 0, hi = kCccCount;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (kCcc[mid].cp < cp)
      lo = mid + 1;
    else
      hi = mid;
  }
  return (lo < kCccCount && kCcc[lo].cp == cp) ? kCcc[lo].ccc : 0;
}

void decompose_one(char32_t cp, std::vector<char32_t>& out) {
  if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
    int s = static_cast<int>(cp - kHangulSBase);
    out.push_back(kHangulLBase + s / kHangulNCount);
    out.push_back(kHangulVBase + (s % kHangulNCount) / kHangulTCount);
    if (s % kHangulTCount != 0) out.push_back(kHangulTBase + s % kHangulTCount);
    return;
  }
  int lo = 0, hi = kDecompCount;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (kDecomp[mid].cp < cp)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < kDecompCount && kDecomp[lo].cp == cp) {
    // Pool entries are already fully decomposed.
    for (int k = 0; k < kDecomp[lo].len; ++k)
      out.push_back(kDecompPool[kDecomp[lo].offset + k]);
    return;
  }
  out.push_back(cp);
}

char32_t compose_pair(char32_t a, char32_t b) {
  if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount &&
      b >= kHangulVBase && b < kHangulVBase + kHangulVCount) {
    return kHangulSBase +
           ((a - kHangulLBase) * kHangulVCount + (b - kHangulVBase)) * kHangulTCount;
  }
  if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
      (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
      b < kHangulTBase + kHangulTCount) {
    return a + (b - kHangulTBase);
  }
  int lo = 0, hi = kCompCount;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (kComp[mid].first < a || (kComp[mid].first == a && kComp[mid].second < b))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < kCompCount && kComp[lo].first == a && kComp[lo].second == b)
    return kComp[lo].composed;
  return 0;
}

}  // namespace

std::vector<char32_t> nfc(const std::vector<char32_t>& cps) {
  std::vector<char32_t> buf;
  buf.reserve(cps.size());
  for (char32_t cp : cps) decompose_one(cp, buf);

  // Canonical ordering: bubble adjacent marks with descending nonzero ccc.
  for (size_t i = 1; i < buf.size(); ++i) {
    unsigned char c = ccc(buf[i]);
    if (c == 0) continue;
    size_t j = i;
    while (j > 0) {
      unsigned char prev = ccc(buf[j - 1]);
      if (prev == 0 || prev <= c) break;
      std::swap(buf[j - 1], buf[j]);
      --j;
    }
  }

  // Composition pass per the canonical algorithm.
  std::vector<char32_t> out;
  out.reserve(buf.size());
  int starter = -1;
  int last_ccc = -1;  // ccc of the previous kept char; -1 means none yet
  for (char32_t cp : buf) {
    unsigned char c = ccc(cp);
    if (starter >= 0 && (last_ccc == 0 || last_ccc < c)) {
      if (char32_t comp = compose_pair(out[starter], cp)) {
        out[starter] = comp;
        continue;
      }
    }
    if (c == 0) {
      starter = static_cast<int>(out.size());
    }
    last_ccc = c;
    out.push_back(cp);
  }
  return out;
}

std::string nfc(std::string_view s) {
  return utf8::encode(nfc(utf8::decode(s)));
}

}  // namespace mill
