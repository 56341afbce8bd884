#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mill {

// Canonical composition (NFC). Tables live in src/unicode_nfc_data.cpp,
// generated by scripts/gen_tables.py; Hangul is handled algorithmically.
std::string nfc(std::string_view s);
std::vector<char32_t> nfc(const std::vector<char32_t>& cps);

namespace norm_data {

struct DecompEntry {
  char32_t cp;
  int offset;  // into kDecompPool
  int len;
};
struct CccEntry {
  char32_t cp;
  unsigned char ccc;
};
struct CompEntry {
  char32_t first;
  char32_t second;
  char32_t composed;
};

extern const char32_t kDecompPool[];
extern const DecompEntry kDecomp[];
extern const int kDecompCount;
extern const CccEntry kCcc[];
extern const int kCccCount;
extern const CompEntry kComp[];
extern const int kCompCount;

}  // namespace norm_data
}  // namespace mill
