#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dtim/errors.hpp"

namespace dtim {

class Utf8Error : public DataError {
public:
  explicit Utf8Error(std::size_t byte_offset);
  std::size_t byte_offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

enum class SegmentMode {
  Grapheme,   // extended grapheme clusters (UAX #29, Unicode 13.0 tables)
  Codepoint,  // one piece per scalar value
};

// Splits text into user-perceived characters. Concatenating the pieces
// reproduces the input byte-for-byte; empty input yields an empty list.
// The views alias `raw`. Throws Utf8Error on malformed input.
std::vector<std::string_view> segment(std::string_view raw,
                                      SegmentMode mode = SegmentMode::Grapheme);

// Decodes one scalar value starting at `pos` and advances `pos` past it.
// Strict: overlongs, surrogates and values beyond U+10FFFF are rejected.
// Throws Utf8Error carrying the offset of the sequence start.
char32_t decode_scalar(std::string_view text, std::size_t& pos);

std::string encode_utf8(char32_t cp);

}  // namespace dtim
