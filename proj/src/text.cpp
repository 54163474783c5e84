#include "dtim/text.hpp"

#include <algorithm>
#include <iterator>

namespace dtim {

Utf8Error::Utf8Error(std::size_t byte_offset)
    : DataError("malformed UTF-8 at byte offset " + std::to_string(byte_offset)),
      offset_(byte_offset) {}

char32_t decode_scalar(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  if (start >= text.size()) throw Utf8Error(start);
  const auto b0 = static_cast<unsigned char>(text[start]);
  if (b0 < 0x80) {
    pos = start + 1;
    return b0;
  }
  int len;
  unsigned char lo = 0x80, hi = 0xBF;  // range for the first continuation byte
  if (b0 >= 0xC2 && b0 <= 0xDF) {
    len = 2;
  } else if (b0 == 0xE0) {
    len = 3;
    lo = 0xA0;
  } else if (b0 == 0xED) {
    len = 3;
    hi = 0x9F;  // excludes surrogates
  } else if (b0 >= 0xE1 && b0 <= 0xEF) {
    len = 3;
  } else if (b0 == 0xF0) {
    len = 4;
    lo = 0x90;
  } else if (b0 >= 0xF1 && b0 <= 0xF3) {
    len = 4;
  } else if (b0 == 0xF4) {
    len = 4;
    hi = 0x8F;  // excludes values beyond U+10FFFF
  } else {
    throw Utf8Error(start);
  }
  if (start + static_cast<std::size_t>(len) > text.size()) {
    throw Utf8Error(start);
  }
  char32_t cp = b0 & (0xFFu >> (len + 1));
  for (int i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(text[start + i]);
    const unsigned char blo = (i == 1) ? lo : 0x80;
    const unsigned char bhi = (i == 1) ? hi : 0xBF;
    if (b < blo || b > bhi) {
      throw Utf8Error(start);
    }
    cp = (cp << 6) | (b & 0x3Fu);
  }
  pos = start + len;
  return cp;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

namespace {

enum class GraphemeBreak : unsigned char {
  Other,
  Control,
  Extend,
  ZWJ,
  RegionalIndicator,
  Prepend,
  SpacingMark,
  HangulL,
  HangulV,
  HangulT,
  HangulLV,
  HangulLVT,
  CR,
  LF,
};

struct BreakPropertyRange {
  char32_t first;
  char32_t last;
  GraphemeBreak cls;
};

struct PictographicRange {
  char32_t first;
  char32_t last;
};

#include "grapheme_break_data.inc"

GraphemeBreak break_class(char32_t cp) {
  if (cp == U'\r') return GraphemeBreak::CR;
  if (cp == U'\n') return GraphemeBreak::LF;
  if (cp >= 0xAC00 && cp <= 0xD7A3) {
    // Precomposed Hangul syllables: LV when the trailing-consonant slot is 0.
    return (cp - 0xAC00) % 28 == 0 ? GraphemeBreak::HangulLV
                                   : GraphemeBreak::HangulLVT;
  }
  const auto* end = std::end(kBreakPropertyRanges);
  const auto* it = std::upper_bound(
      std::begin(kBreakPropertyRanges), end, cp,
      [](char32_t v, const BreakPropertyRange& r) { return v < r.first; });
  if (it != std::begin(kBreakPropertyRanges)) {
    --it;
    if (cp >= it->first && cp <= it->last) return it->cls;
  }
  return GraphemeBreak::Other;
}

bool is_pictographic(char32_t cp) {
  const auto* end = std::end(kPictographicRanges);
  const auto* it = std::upper_bound(
      std::begin(kPictographicRanges), end, cp,
      [](char32_t v, const PictographicRange& r) { return v < r.first; });
  if (it == std::begin(kPictographicRanges)) return false;
  --it;
  return cp >= it->first && cp <= it->last;
}

bool is_separator(GraphemeBreak b) {
  return b == GraphemeBreak::Control || b == GraphemeBreak::CR ||
         b == GraphemeBreak::LF;
}

// UAX #29 extended grapheme cluster rules GB3..GB13 plus GB999.
// `ri_run` is the length of the regional-indicator run ending at prev;
// `pict_before_zwj` records whether the text before a ZWJ at prev matched
// ExtPict Extend*.
bool is_break(GraphemeBreak prev, GraphemeBreak cur, bool cur_pict,
              bool pict_before_zwj, int ri_run) {
  if (prev == GraphemeBreak::CR && cur == GraphemeBreak::LF) return false;
  if (is_separator(prev)) return true;
  if (is_separator(cur)) return true;
  if (prev == GraphemeBreak::HangulL &&
      (cur == GraphemeBreak::HangulL || cur == GraphemeBreak::HangulV ||
       cur == GraphemeBreak::HangulLV || cur == GraphemeBreak::HangulLVT)) {
    return false;
  }
  if ((prev == GraphemeBreak::HangulLV || prev == GraphemeBreak::HangulV) &&
      (cur == GraphemeBreak::HangulV || cur == GraphemeBreak::HangulT)) {
    return false;
  }
  if ((prev == GraphemeBreak::HangulLVT || prev == GraphemeBreak::HangulT) &&
      cur == GraphemeBreak::HangulT) {
    return false;
  }
  if (cur == GraphemeBreak::Extend || cur == GraphemeBreak::ZWJ) return false;
  if (cur == GraphemeBreak::SpacingMark) return false;
  if (prev == GraphemeBreak::Prepend) return false;
  if (prev == GraphemeBreak::ZWJ && cur_pict && pict_before_zwj) return false;
  if (prev == GraphemeBreak::RegionalIndicator &&
      cur == GraphemeBreak::RegionalIndicator && (ri_run % 2) == 1) {
    return false;
  }
  return true;
}

}  // namespace

std::vector<std::string_view> segment(std::string_view raw, SegmentMode mode) {
  std::vector<std::string_view> out;
  if (raw.empty()) return out;

  if (mode == SegmentMode::Codepoint) {
    std::size_t pos = 0;
    while (pos < raw.size()) {
      const std::size_t start = pos;
      decode_scalar(raw, pos);
      out.push_back(raw.substr(start, pos - start));
    }
    return out;
  }

  std::size_t pos = 0;
  char32_t cp = decode_scalar(raw, pos);
  GraphemeBreak prev = break_class(cp);
  bool prev_pe_run = is_pictographic(cp);  // text so far matches ExtPict Extend*
  bool pict_before_zwj = false;
  int ri_run = prev == GraphemeBreak::RegionalIndicator ? 1 : 0;
  std::size_t cluster_start = 0;

  while (pos < raw.size()) {
    const std::size_t cur_start = pos;
    cp = decode_scalar(raw, pos);
    const GraphemeBreak cur = break_class(cp);
    const bool cur_pict = is_pictographic(cp);

    if (is_break(prev, cur, cur_pict, pict_before_zwj, ri_run)) {
      out.push_back(raw.substr(cluster_start, cur_start - cluster_start));
      cluster_start = cur_start;
    }

    if (cur == GraphemeBreak::ZWJ) pict_before_zwj = prev_pe_run;
    prev_pe_run = cur_pict || (prev_pe_run && cur == GraphemeBreak::Extend);
    if (cur == GraphemeBreak::RegionalIndicator) {
      ri_run = prev == GraphemeBreak::RegionalIndicator ? ri_run + 1 : 1;
    } else {
      ri_run = 0;
    }
    prev = cur;
  }
  out.push_back(raw.substr(cluster_start));
  return out;
}

}  // namespace dtim
