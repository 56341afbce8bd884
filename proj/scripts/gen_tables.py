#!/usr/bin/env python3
"""Regenerate the checked-in data tables.

Emits, relative to the repository root:

  src/unicode_nfc_data.cpp   canonical decompositions, combining classes and
                             composition pairs taken from the running Python's
                             Unicode database (Hangul is algorithmic and left
                             out of the tables)
  src/html_entity_data.cpp   HTML5 named character references (the ';' forms)
  src/script_range_data.cpp  compiled copy of data/script_ranges.tsv
  tests/data/nfc_cases.tsv   frozen NFC vectors produced with the reference
                             normalizer, used as the oracle for our C++ port

Run from the repository root:  python3 scripts/gen_tables.py
"""

import html.entities
import pathlib
import random
import sys
import unicodedata

ROOT = pathlib.Path(__file__).resolve().parent.parent

HANGUL_FIRST = 0xAC00
HANGUL_LAST = 0xD7A3


def u(cp):
    return "0x%X" % cp


def cxx_header(purpose):
    return (
        "// Generated by scripts/gen_tables.py (%s,\n"
        "// Unicode %s). Do not edit by hand.\n\n"
        % (purpose, unicodedata.unidata_version)
    )


def gen_nfc(out):
    decomp = []   # (cp, expansion) with full canonical (NFD) expansion
    pool = []
    for cp in range(0x110000):
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            continue
        ch = chr(cp)
        nfd = unicodedata.normalize("NFD", ch)
        if nfd != ch:
            decomp.append((cp, len(pool), len(nfd)))
            pool.extend(ord(c) for c in nfd)

    ccc = [(cp, unicodedata.combining(chr(cp)))
           for cp in range(0x110000) if unicodedata.combining(chr(cp))]

    # A pair (a, b) composes to c iff the reference normalizer says so.
    comp = []
    for cp in range(0x110000):
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            continue
        ch = chr(cp)
        d = unicodedata.decomposition(ch)
        if not d or d.startswith("<"):
            continue
        parts = [int(p, 16) for p in d.split()]
        if len(parts) != 2:
            continue
        if unicodedata.normalize("NFC", chr(parts[0]) + chr(parts[1])) == ch:
            comp.append((parts[0], parts[1], cp))
    comp.sort()

    with open(out, "w", encoding="utf-8") as f:
        f.write(cxx_header("NFC tables"))
        f.write('#include "mill/unicode_norm.hpp"\n\n')
        f.write("namespace mill::norm_data {\n\n")
        f.write("const char32_t kDecompPool[] = {\n")
        for i in range(0, len(pool), 12):
            f.write("  " + ", ".join(u(c) for c in pool[i:i + 12]) + ",\n")
        f.write("};\n\n")
        f.write("const DecompEntry kDecomp[] = {\n")
        for cp, off, n in decomp:
            f.write("  {%s, %d, %d},\n" % (u(cp), off, n))
        f.write("};\nconst int kDecompCount = %d;\n\n" % len(decomp))
        f.write("const CccEntry kCcc[] = {\n")
        for cp, c in ccc:
            f.write("  {%s, %d},\n" % (u(cp), c))
        f.write("};\nconst int kCccCount = %d;\n\n" % len(ccc))
        f.write("const CompEntry kComp[] = {\n")
        for a, b, c in comp:
            f.write("  {%s, %s, %s},\n" % (u(a), u(b), u(c)))
        f.write("};\nconst int kCompCount = %d;\n\n" % len(comp))
        f.write("}  // namespace mill::norm_data\n")
    print("wrote %s: %d decompositions, %d ccc, %d compositions"
          % (out, len(decomp), len(ccc), len(comp)))


def gen_entities(out):
    ents = sorted((name[:-1], val) for name, val in
                  html.entities.html5.items() if name.endswith(";"))
    with open(out, "w", encoding="utf-8") as f:
        f.write(cxx_header("HTML5 named character references"))
        f.write('#include "mill/html.hpp"\n\n')
        f.write("namespace mill::entity_data {\n\n")
        f.write("// Sorted by name; values are UTF-8.\n")
        f.write("const Entity kEntities[] = {\n")
        for name, val in ents:
            bytes_ = val.encode("utf-8")
            esc = "".join("\\x%02x" % b for b in bytes_)
            f.write('  {"%s", "%s"},\n' % (name, esc))
        f.write("};\nconst int kEntityCount = %d;\n\n" % len(ents))
        f.write("}  // namespace mill::entity_data\n")
    print("wrote %s: %d entities" % (out, len(ents)))


def gen_script_ranges(out):
    rows = []
    for line in (ROOT / "data/script_ranges.tsv").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        first, last, script = line.split("\t")
        rows.append((int(first, 16), int(last, 16), script))
    with open(out, "w", encoding="utf-8") as f:
        f.write(cxx_header("compiled from data/script_ranges.tsv"))
        f.write('#include "mill/script.hpp"\n\n')
        f.write("namespace mill::script_data {\n\n")
        f.write("const ScriptRange kRanges[] = {\n")
        for first, last, script in rows:
            f.write("  {%s, %s, Script::%s},\n" % (u(first), u(last), script))
        f.write("};\nconst int kRangeCount = %d;\n\n" % len(rows))
        f.write("}  // namespace mill::script_data\n")
    print("wrote %s: %d ranges" % (out, len(rows)))


def gen_nfc_cases(out):
    cases = []

    def add(s):
        cases.append((s, unicodedata.normalize("NFC", s)))

    # Hand-picked shapes: precomposed vs decomposed Latin, stacked marks in
    # the wrong canonical order, nukta forms (several are composition
    # exclusions), two-part Indic vowels, Hangul, and singletons.
    add("café")
    add("café")
    add("ȩ́")          # marks out of canonical order
    add("ȩ́")
    add("क़")           # ka + nukta: stays decomposed (exclusion)
    add("क़")                 # qa: singleton-decomposes to ka + nukta
    add("ড়")           # Bengali rra components (exclusion)
    add("ொ")           # Tamil e + aa -> o (composes)
    add("ஒ")                 # Tamil o, already composed
    add("Ḍ̇")           # d-dot-below + dot-above
    add("ḍ̇")          # same, fully decomposed, reordered
    add("각")     # Hangul jamo -> syllable
    add("각")
    add("Å")                 # angstrom sign -> A-ring
    add("Ω")                 # ohm sign -> omega
    add("q̣̇x")
    add("शि")           # sha + vowel sign i (no composition)

    rng = random.Random(20240517)
    interesting = [0x0041, 0x0061, 0x0065, 0x006f, 0x0301, 0x0300, 0x0327,
                   0x0323, 0x0307, 0x0915, 0x093c, 0x0928, 0x092f, 0x0930,
                   0x09a1, 0x09bc, 0x0bc6, 0x0bbe, 0x0bd7, 0x00e9, 0x00c5,
                   0x0958, 0x095f, 0x1e0c, 0x212b, 0x1100, 0x1161, 0x11a8,
                   0xac00, 0x0061, 0x0031, 0x0020]
    for _ in range(2000):
        n = rng.randint(1, 8)
        s = "".join(chr(rng.choice(interesting)) for _ in range(n))
        add(s)

    with open(out, "w", encoding="utf-8") as f:
        f.write("# input<TAB>expected, code points as hex, space separated\n")
        for src, exp in cases:
            f.write("%s\t%s\n" % (
                " ".join("%04X" % ord(c) for c in src),
                " ".join("%04X" % ord(c) for c in exp)))
    print("wrote %s: %d cases" % (out, len(cases)))


def main():
    gen_nfc(ROOT / "src/unicode_nfc_data.cpp")
    gen_entities(ROOT / "src/html_entity_data.cpp")
    gen_script_ranges(ROOT / "src/script_range_data.cpp")
    gen_nfc_cases(ROOT / "tests/data/nfc_cases.tsv")
    return 0


if __name__ == "__main__":
    sys.exit(main())
