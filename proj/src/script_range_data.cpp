// Generated by scripts/gen_tables.py (compiled from data/script_ranges.tsv,
// Unicode 13.0.0). Do not edit by hand.

#include "mill/script.hpp"

namespace mill::script_data {

const ScriptRange kRanges[] = {
  {0x21, 0x2F, Script::Punct},
  {0x30, 0x39, Script::Digit},
  {0x3A, 0x40, Script::Punct},
  {0x41, 0x5A, Script::Latin},
  {0x5B, 0x60, Script::Punct},
  {0x61, 0x7A, Script::Latin},
  {0x7B, 0x7E, Script::Punct},
  {0xA1, 0xBF, Script::Punct},
  {0xC0, 0xD6, Script::Latin},
  {0xD7, 0xD7, Script::Punct},
  {0xD8, 0xF6, Script::Latin},
  {0xF7, 0xF7, Script::Punct},
  {0xF8, 0x24F, Script::Latin},
  {0x600, 0x60B, Script::Arabic},
  {0x60C, 0x60D, Script::Punct},
  {0x60E, 0x61A, Script::Arabic},
  {0x61B, 0x61F, Script::Punct},
  {0x620, 0x65F, Script::Arabic},
  {0x660, 0x669, Script::Digit},
  {0x66A, 0x66D, Script::Punct},
  {0x66E, 0x6D3, Script::Arabic},
  {0x6D4, 0x6D4, Script::Punct},
  {0x6D5, 0x6EF, Script::Arabic},
  {0x6F0, 0x6F9, Script::Digit},
  {0x6FA, 0x6FF, Script::Arabic},
  {0x750, 0x77F, Script::Arabic},
  {0x900, 0x963, Script::Devanagari},
  {0x964, 0x965, Script::Punct},
  {0x966, 0x96F, Script::Digit},
  {0x970, 0x970, Script::Punct},
  {0x971, 0x97F, Script::Devanagari},
  {0x980, 0x9E5, Script::Bengali},
  {0x9E6, 0x9EF, Script::Digit},
  {0x9F0, 0x9FD, Script::Bengali},
  {0xA00, 0xA65, Script::Gurmukhi},
  {0xA66, 0xA6F, Script::Digit},
  {0xA70, 0xA7F, Script::Gurmukhi},
  {0xA80, 0xAE5, Script::Gujarati},
  {0xAE6, 0xAEF, Script::Digit},
  {0xAF0, 0xAFF, Script::Gujarati},
  {0xB00, 0xB65, Script::Oriya},
  {0xB66, 0xB6F, Script::Digit},
  {0xB70, 0xB7F, Script::Oriya},
  {0xB80, 0xBE5, Script::Tamil},
  {0xBE6, 0xBEF, Script::Digit},
  {0xBF0, 0xBFA, Script::Tamil},
  {0xC00, 0xC65, Script::Telugu},
  {0xC66, 0xC6F, Script::Digit},
  {0xC70, 0xC7F, Script::Telugu},
  {0xD00, 0xD65, Script::Malayalam},
  {0xD66, 0xD6F, Script::Digit},
  {0xD70, 0xD7F, Script::Malayalam},
  {0x1E00, 0x1EFF, Script::Latin},
  {0x2000, 0x206F, Script::Punct},
  {0x20A0, 0x20CF, Script::Punct},
  {0x2E00, 0x2E7F, Script::Punct},
  {0x3001, 0x3002, Script::Punct},
  {0xA8E0, 0xA8FF, Script::Devanagari},
  {0xFB50, 0xFDFF, Script::Arabic},
  {0xFE70, 0xFEFF, Script::Arabic},
};
const int kRangeCount = 60;

}  // namespace mill::script_data
