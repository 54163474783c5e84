#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "dtim/text.hpp"

using dtim::SegmentMode;
using dtim::Utf8Error;
using dtim::encode_utf8;
using dtim::segment;

namespace {

std::vector<std::string> pieces(std::string_view raw,
                                SegmentMode mode = SegmentMode::Grapheme) {
  std::vector<std::string> out;
  for (auto v : segment(raw, mode)) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_SUITE("text") {

TEST_CASE("ascii splits one codepoint per cluster") {
  CHECK(pieces("abc") == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("empty input gives empty list") {
  CHECK(pieces("").empty());
}

TEST_CASE("malayalam consonant plus dependent vowel sign is one character") {
  // ka + vowel sign aa
  CHECK(pieces("കാ") == std::vector<std::string>{"കാ"});
  // ka + vowel sign u (non-spacing)
  CHECK(pieces("കു") == std::vector<std::string>{"കു"});
  // ka + anusvara (spacing mark)
  CHECK(pieces("കം") == std::vector<std::string>{"കം"});
}

TEST_CASE("malayalam virama attaches to the preceding consonant") {
  // ka + virama + ka: the virama joins its consonant, the next consonant
  // starts a new character
  CHECK(pieces("ക്ക") ==
        std::vector<std::string>{"ക്", "ക"});
}

TEST_CASE("malayalam dot reph prepends") {
  CHECK(pieces("ൎക") == std::vector<std::string>{"ൎക"});
}

TEST_CASE("malayalam chillu letters stand alone") {
  CHECK(pieces("ൻക") == std::vector<std::string>{"ൻ", "ക"});
}

TEST_CASE("combining accents extend") {
  CHECK(pieces("éx") == std::vector<std::string>{"é", "x"});
}

TEST_CASE("crlf is one cluster, other controls split") {
  CHECK(pieces("\r\n") == std::vector<std::string>{"\r\n"});
  CHECK(pieces("a\rb") == std::vector<std::string>{"a", "\r", "b"});
  CHECK(pieces("a\tb") == std::vector<std::string>{"a", "\t", "b"});
  // control consumes a following combining mark boundary
  CHECK(pieces("\t́") == std::vector<std::string>{"\t", "́"});
}

TEST_CASE("decomposed hangul syllable is one cluster") {
  CHECK(pieces("한") ==
        std::vector<std::string>{"한"});
  // precomposed LV + T
  CHECK(pieces("각") == std::vector<std::string>{"각"});
}

TEST_CASE("regional indicators pair up") {
  const std::string ri = "\U0001F1E6\U0001F1E7\U0001F1E8\U0001F1E9";
  CHECK(pieces(ri) == std::vector<std::string>{"\U0001F1E6\U0001F1E7",
                                               "\U0001F1E8\U0001F1E9"});
}

TEST_CASE("emoji zwj sequences hold together") {
  const std::string family = "\U0001F469‍\U0001F466";  // woman zwj boy
  CHECK(pieces(family) == std::vector<std::string>{family});
  const std::string thumbs = "\U0001F44D\U0001F3FB";  // thumbs up + skin tone
  CHECK(pieces(thumbs) == std::vector<std::string>{thumbs});
}

TEST_CASE("codepoint mode splits every scalar") {
  CHECK(pieces("കാ", SegmentMode::Codepoint) ==
        std::vector<std::string>{"ക", "ാ"});
}

TEST_CASE("malformed utf-8 reports the byte offset") {
  const auto offset_of = [](std::string_view s) -> std::size_t {
    try {
      segment(s);
    } catch (const Utf8Error& e) {
      return e.byte_offset();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("\xFF") == 0);
  CHECK(offset_of("ab\x80") == 2);
  CHECK(offset_of("\xC0\xAF") == 0);          // overlong
  CHECK(offset_of("\xED\xA0\x80") == 0);      // surrogate
  CHECK(offset_of("\xF5\x80\x80\x80") == 0);  // beyond U+10FFFF
  CHECK(offset_of("a\xE0\xA4") == 1);         // truncated
  CHECK(offset_of("\xE0\x80\xA4") == 0);      // overlong 3-byte
}

TEST_CASE("arbitrary byte strings segment cleanly or throw") {
  std::mt19937_64 rng(149);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string s;
    const std::size_t len = rng() % 12;
    for (std::size_t i = 0; i < len; ++i) {
      s.push_back(static_cast<char>(rng() & 0xFF));
    }
    try {
      std::string joined;
      for (auto piece : segment(s)) joined += piece;
      REQUIRE(joined == s);
    } catch (const Utf8Error& e) {
      REQUIRE(e.byte_offset() < s.size());
    }
  }
}

TEST_CASE("rejoining clusters reproduces the input") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 9);
  const char32_t pool[] = {U'a',    U'.',    0x0D15, 0x0D3E, 0x0D4D,
                           0x0301, 0x4E8C, 0x1F1E6, 0x200D, 0x1F469};
  for (int trial = 0; trial < 200; ++trial) {
    std::string s;
    const int len = pick(rng) + 1;
    for (int i = 0; i < len; ++i) s += encode_utf8(pool[pick(rng)]);
    for (auto mode : {SegmentMode::Grapheme, SegmentMode::Codepoint}) {
      std::string joined;
      for (auto piece : segment(s, mode)) joined += piece;
      REQUIRE(joined == s);
    }
  }
}

}  // TEST_SUITE
