#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dtim/lexicon.hpp"
#include "support.hpp"

using namespace dtim;

namespace {

Lexicon from_text(const std::string& text, std::size_t stem_length = 2) {
  std::istringstream in(text);
  return Lexicon::from_lines(in, {stem_length, SegmentMode::Grapheme});
}

std::vector<CharId> ids_of(const Lexicon& lex, const std::string& word) {
  for (const Word& w : lex.words()) {
    if (w.raw == word) return w.chars;
  }
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_SUITE("lexicon") {

TEST_CASE("duplicates are dropped keeping first occurrence") {
  const Lexicon lex = from_text("ab\nab\ncd\n");
  REQUIRE(lex.size() == 2);
  CHECK(lex.words()[0].raw == "ab");
  CHECK(lex.words()[1].raw == "cd");
}

TEST_CASE("whitespace is trimmed and blank lines skipped") {
  const Lexicon lex = from_text("  ab \n\n\t\ncd\n ab\n");
  REQUIRE(lex.size() == 2);
  CHECK(lex.words()[0].raw == "ab");
}

TEST_CASE("windows line endings are handled") {
  const Lexicon lex = from_text("ab\r\ncd\r\n");
  REQUIRE(lex.size() == 2);
  CHECK(lex.words()[0].raw == "ab");
  CHECK(lex.words()[1].raw == "cd");
}

TEST_CASE("stem index collects distinct third characters") {
  const Lexicon lex = from_text("abc\nabd\nabe\n");
  const auto stem = ids_of(lex, "abc");
  CHECK(lex.diversity(std::span(stem.data(), 2)) == 3);
}

TEST_CASE("words of exactly stem length key an empty successor set") {
  const Lexicon lex = from_text("ab\n");
  const auto stem = ids_of(lex, "ab");
  CHECK(lex.stem_index().size() == 1);
  CHECK(lex.diversity(std::span(stem.data(), 2)) == 0);
}

TEST_CASE("unseen stems have diversity zero") {
  const Lexicon lex = from_text("abc\n");
  const std::vector<CharId> unseen = {999, 998};
  CHECK(lex.diversity(unseen) == 0);
}

TEST_CASE("stems shared across words accumulate") {
  // four distinct successors of one stem, two of another
  const Lexicon lex =
      from_text("puta\npume\npubo\npupa\nopx\nopy\nop\n");
  const Lexicon relex = lex.with_stem_length(2);
  const auto pu = ids_of(relex, "puta");
  CHECK(relex.diversity(std::span(pu.data(), 2)) == 4);
  const auto op = ids_of(relex, "opx");
  CHECK(relex.diversity(std::span(op.data(), 2)) == 2);
}

TEST_CASE("character identity is stable within a lexicon") {
  const Lexicon lex = from_text("aba\ncab\n");
  const auto w0 = ids_of(lex, "aba");
  const auto w1 = ids_of(lex, "cab");
  CHECK(w0[0] == w0[2]);
  CHECK(w0[0] == w1[1]);
  CHECK(w0[1] == w1[2]);
  CHECK(lex.char_vocab_size() == 3);
}

TEST_CASE("grapheme clusters intern as single characters") {
  const Lexicon lex = from_text("കാക\n");  // |kaa|ka|
  REQUIRE(lex.size() == 1);
  CHECK(lex.words()[0].length() == 2);
  CHECK(lex.char_vocab_size() == 2);
}

TEST_CASE("malformed utf-8 reports the line") {
  std::istringstream in("ok\nbad\xFF\n");
  CHECK_THROWS_WITH_AS(Lexicon::from_lines(in, {}),
                       doctest::Contains("line 2"), DataError);
}

TEST_CASE("empty input is an error") {
  std::istringstream in("\n  \n");
  CHECK_THROWS_AS(Lexicon::from_lines(in, {}), DataError);
}

TEST_CASE("ngrams enumerate contiguous windows") {
  const Lexicon lex = from_text("abc\nab\n");
  const Word& abc = lex.words()[0];
  const Word& ab = lex.words()[1];

  const auto bi = ngrams(abc, 2);
  REQUIRE(bi.size() == 2);
  CHECK(bi[0] == make_ngram({abc.chars[0], abc.chars[1]}));
  CHECK(bi[1] == make_ngram({abc.chars[1], abc.chars[2]}));

  const auto uni = ngrams(abc, 1);
  REQUIRE(uni.size() == 3);
  CHECK(uni[0] == make_ngram({abc.chars[0]}));

  CHECK(ngrams(ab, 3).empty());
}

TEST_CASE("padded ngrams bracket the word with boundary markers") {
  const Lexicon lex = from_text("ab\nc\n");
  const Word& ab = lex.words()[0];
  const Word& c = lex.words()[1];
  const auto bi = ngrams(ab, 2, true);
  REQUIRE(bi.size() == 3);
  CHECK(bi.front() == make_ngram({kBoundaryChar, ab.chars[0]}));
  CHECK(bi.back() == make_ngram({ab.chars[1], kBoundaryChar}));
  CHECK(ngrams(c, 2, true).size() == 2);
}

TEST_CASE("ngram counts and unigram concatenation") {
  std::mt19937_64 rng(11);
  const Lexicon lex = testsupport::random_lexicon(rng, 40, 1);
  for (const Word& w : lex.words()) {
    for (int n = 1; n <= 4; ++n) {
      const auto grams = ngrams(w, n);
      const std::size_t expect =
          w.length() >= static_cast<std::size_t>(n) ? w.length() - n + 1 : 0;
      REQUIRE(grams.size() == expect);
    }
    const auto unis = ngrams(w, 1);
    for (std::size_t i = 0; i < unis.size(); ++i) {
      REQUIRE(unis[i].ids[0] == w.chars[i]);
    }
  }
}

TEST_CASE("stem index matches a brute-force rebuild") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Lexicon lex = testsupport::random_lexicon(rng, 60, 1, 4, 1, 5);
    std::map<std::vector<CharId>, std::set<CharId>> expect;
    for (const Word& w : lex.words()) {
      if (w.length() < lex.stem_length()) continue;
      std::vector<CharId> stem(w.chars.begin(),
                               w.chars.begin() + lex.stem_length());
      auto& s = expect[stem];
      if (w.length() > lex.stem_length()) s.insert(w.chars[lex.stem_length()]);
    }
    REQUIRE(lex.stem_index().size() == expect.size());
    for (const auto& [stem, succ] : expect) {
      REQUIRE(lex.diversity(stem) == succ.size());
    }
  }
}

TEST_CASE("loading a serialized lexicon reproduces it") {
  std::mt19937_64 rng(17);
  const Lexicon lex = testsupport::random_lexicon(rng, 50, 1);
  std::string serialized;
  for (const Word& w : lex.words()) serialized += w.raw + "\n";
  const Lexicon again = from_text(serialized);
  REQUIRE(again.size() == lex.size());
  for (std::size_t i = 0; i < lex.size(); ++i) {
    REQUIRE(again.words()[i].raw == lex.words()[i].raw);
    REQUIRE(again.words()[i].chars == lex.words()[i].chars);
  }
  CHECK(again.char_vocab_size() == lex.char_vocab_size());
  CHECK(again.stem_index() == lex.stem_index());
}

TEST_CASE("rejoining interned characters reproduces the raw form") {
  std::mt19937_64 rng(19);
  const Lexicon lex = testsupport::random_lexicon(rng, 50, 1);
  for (const Word& w : lex.words()) {
    std::string joined;
    for (CharId id : w.chars) joined += lex.char_form(id);
    REQUIRE(joined == w.raw);
  }
}

}  // TEST_SUITE
