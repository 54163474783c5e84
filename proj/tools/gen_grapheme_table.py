#!/usr/bin/env python3
"""Regenerates src/grapheme_break_data.inc.

Derives Grapheme_Cluster_Break property ranges from the Python runtime's
Unicode character database (general categories) plus the fixed exception
lists from UAX #29 / PropList. Run from the repository root:

    python3 tools/gen_grapheme_table.py > src/grapheme_break_data.inc

The table targets Unicode 13.0.0 semantics (no InCB conjunct linking);
regenerate only with a CPython whose unicodedata matches.
"""
import sys
import unicodedata

MAX_CP = 0x110000

# PropList: Other_Grapheme_Extend (spacing marks that extend clusters, ZWNJ, ...)
OTHER_GRAPHEME_EXTEND = set(
    [0x09BE, 0x09D7, 0x0B3E, 0x0B57, 0x0BBE, 0x0BD7, 0x0CC2, 0x0D3E, 0x0D57,
     0x0DCF, 0x0DDF, 0x1B35, 0x200C, 0xFF9E, 0xFF9F, 0x1133E, 0x11357,
     0x114B0, 0x114BD, 0x115AF, 0x11930, 0x1D165]
    + list(range(0x0CD5, 0x0CD7))
    + list(range(0x302E, 0x3030))
    + list(range(0x1D16E, 0x1D173))
    + list(range(0xE0020, 0xE0080)))

# Emoji modifiers (skin tones) carry GCB=Extend despite general category Sk.
EMOJI_MODIFIER = set(range(0x1F3FB, 0x1F400))

# Format characters that are Prepend rather than Control.
PREPEND = set(
    list(range(0x0600, 0x0606)) + [0x06DD, 0x070F, 0x08E2, 0x0D4E, 0x110BD,
                                   0x110CD, 0x111C2, 0x111C3, 0x1193F, 0x11941,
                                   0x11A3A, 0x11D46]
    + list(range(0x11A84, 0x11A8A)))

# Mc codepoints excluded from SpacingMark by UAX #29.
SPACINGMARK_EXCLUDED = set(
    [0x102B, 0x102C, 0x1038, 0x1083, 0x108F, 0x1A61, 0x1A63, 0x1A64, 0xAA7B,
     0xAA7D]
    + list(range(0x1062, 0x1065)) + list(range(0x1067, 0x106E))
    + list(range(0x1087, 0x108D)) + list(range(0x109A, 0x109D))
    + list(range(0x11720, 0x11722)))

# Lo codepoints included in SpacingMark (Thai/Lao SARA AM).
SPACINGMARK_ADDED = {0x0E33, 0x0EB3}

# Hangul conjoining jamo. Precomposed LV/LVT (AC00..D7A3) are classified
# arithmetically at runtime and deliberately absent from the table.
HANGUL_L = list(range(0x1100, 0x1160)) + list(range(0xA960, 0xA97D))
HANGUL_V = list(range(0x1160, 0x11A8)) + list(range(0xD7B0, 0xD7C7))
HANGUL_T = list(range(0x11A8, 0x1200)) + list(range(0xD7CB, 0xD7FC))

# Extended_Pictographic (emoji-data), used by GB11.
EXT_PICT_RANGES = [
    (0x00A9, 0x00A9), (0x00AE, 0x00AE), (0x203C, 0x203C), (0x2049, 0x2049),
    (0x2122, 0x2122), (0x2139, 0x2139), (0x2194, 0x2199), (0x21A9, 0x21AA),
    (0x231A, 0x231B), (0x2328, 0x2328), (0x2388, 0x2388), (0x23CF, 0x23CF),
    (0x23E9, 0x23F3), (0x23F8, 0x23FA), (0x24C2, 0x24C2), (0x25AA, 0x25AB),
    (0x25B6, 0x25B6), (0x25C0, 0x25C0), (0x25FB, 0x25FE), (0x2600, 0x2605),
    (0x2607, 0x2612), (0x2614, 0x2685), (0x2690, 0x2705), (0x2708, 0x2712),
    (0x2714, 0x2714), (0x2716, 0x2716), (0x271D, 0x271D), (0x2721, 0x2721),
    (0x2728, 0x2728), (0x2733, 0x2734), (0x2744, 0x2744), (0x2747, 0x2747),
    (0x274C, 0x274C), (0x274E, 0x274E), (0x2753, 0x2755), (0x2757, 0x2757),
    (0x2763, 0x2767), (0x2795, 0x2797), (0x27A1, 0x27A1), (0x27B0, 0x27B0),
    (0x27BF, 0x27BF), (0x2934, 0x2935), (0x2B05, 0x2B07), (0x2B1B, 0x2B1C),
    (0x2B50, 0x2B50), (0x2B55, 0x2B55), (0x3030, 0x3030), (0x303D, 0x303D),
    (0x3297, 0x3297), (0x3299, 0x3299), (0x1F000, 0x1F0FF),
    (0x1F10D, 0x1F10F), (0x1F12F, 0x1F12F), (0x1F16C, 0x1F171),
    (0x1F17E, 0x1F17F), (0x1F18E, 0x1F18E), (0x1F191, 0x1F19A),
    (0x1F1AD, 0x1F1E5), (0x1F201, 0x1F20F), (0x1F21A, 0x1F21A),
    (0x1F22F, 0x1F22F), (0x1F232, 0x1F23A), (0x1F23C, 0x1F23F),
    (0x1F249, 0x1F3FA), (0x1F400, 0x1F53D), (0x1F546, 0x1F64F),
    (0x1F680, 0x1F6FF), (0x1F774, 0x1F77F), (0x1F7D5, 0x1F7FF),
    (0x1F80C, 0x1F80F), (0x1F848, 0x1F85F), (0x1F888, 0x1F8FF),
    (0x1F90C, 0x1F93A), (0x1F93C, 0x1F945), (0x1F947, 0x1FAFF),
    (0x1FC00, 0x1FFFD),
]


def classify(cp):
    if cp in (0x000D, 0x000A):
        return None  # CR/LF handled directly in code
    if cp == 0x200D:
        return "ZWJ"
    if 0x1F1E6 <= cp <= 0x1F1FF:
        return "RegionalIndicator"
    if cp in PREPEND:
        return "Prepend"
    cat = unicodedata.category(chr(cp))
    if cp in OTHER_GRAPHEME_EXTEND or cp in EMOJI_MODIFIER or cat in ("Mn", "Me"):
        return "Extend"
    if cat in ("Zl", "Zp", "Cc") or (cat == "Cf" and cp != 0x200C):
        return "Control"
    if (cat == "Mc" and cp not in SPACINGMARK_EXCLUDED) or cp in SPACINGMARK_ADDED:
        return "SpacingMark"
    if cp in HANGUL_L_SET:
        return "HangulL"
    if cp in HANGUL_V_SET:
        return "HangulV"
    if cp in HANGUL_T_SET:
        return "HangulT"
    return None


HANGUL_L_SET = set(HANGUL_L)
HANGUL_V_SET = set(HANGUL_V)
HANGUL_T_SET = set(HANGUL_T)


def sanity_check():
    expected = {
        0x0D3E: "Extend",        # Malayalam vowel sign AA
        0x0D40: "SpacingMark",   # Malayalam vowel sign II
        0x0D4D: "Extend",        # Malayalam virama
        0x0D4E: "Prepend",       # Malayalam dot reph
        0x0D02: "SpacingMark",   # Malayalam anusvara
        0x0D57: "Extend",        # Malayalam AU length mark
        0x0301: "Extend",        # combining acute
        0x200C: "Extend",        # ZWNJ
        0x200D: "ZWJ",
        0x200B: "Control",       # ZWSP
        0x0009: "Control",
        0xFE0F: "Extend",        # variation selector-16
        0x1F3FB: "Extend",       # emoji modifier
        0x1F1E6: "RegionalIndicator",
        0x1100: "HangulL",
        0x1161: "HangulV",
        0x11A8: "HangulT",
        0x0915: None,            # Devanagari KA: Other
        0x0D15: None,            # Malayalam KA: Other
        0x0D7A: None,            # Malayalam chillu NN: Other
    }
    for cp, want in expected.items():
        got = classify(cp)
        assert got == want, f"U+{cp:04X}: expected {want}, derived {got}"


def collect_ranges():
    ranges = []
    cur = None
    for cp in range(MAX_CP):
        cls = classify(cp)
        if cls is None:
            if cur:
                ranges.append(cur)
                cur = None
            continue
        if cur and cur[2] == cls and cur[1] == cp - 1:
            cur = (cur[0], cp, cls)
        else:
            if cur:
                ranges.append(cur)
            cur = (cp, cp, cls)
    if cur:
        ranges.append(cur)
    return ranges


def main():
    sanity_check()
    ranges = collect_ranges()
    out = sys.stdout
    out.write("// Generated by tools/gen_grapheme_table.py -- do not edit.\n")
    out.write(f"// Unicode character database version: {unicodedata.unidata_version}\n")
    out.write(f"// {len(ranges)} ranges.\n")
    out.write("inline constexpr BreakPropertyRange kBreakPropertyRanges[] = {\n")
    for first, last, cls in ranges:
        out.write(f"    {{0x{first:05X}, 0x{last:05X}, GraphemeBreak::{cls}}},\n")
    out.write("};\n\n")
    pict = sorted(EXT_PICT_RANGES)
    out.write(f"inline constexpr PictographicRange kPictographicRanges[{len(pict)}] = {{\n")
    for first, last in pict:
        out.write(f"    {{0x{first:05X}, 0x{last:05X}}},\n")
    out.write("};\n")


if __name__ == "__main__":
    main()
