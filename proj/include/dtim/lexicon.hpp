#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dtim/errors.hpp"
#include "dtim/text.hpp"

namespace dtim {

// Opaque identifier of one user-perceived character; stable within a Lexicon.
using CharId = std::uint32_t;

// Word-boundary marker used by padded n-gram extraction. Never part of the
// character vocabulary.
inline constexpr CharId kBoundaryChar = 0xFFFFFFFFu;

struct Word {
  std::string raw;
  std::vector<CharId> chars;
  std::size_t length() const noexcept { return chars.size(); }
};

struct LexiconConfig {
  std::size_t stem_length = 2;
  SegmentMode segment_mode = SegmentMode::Grapheme;
};

struct CharSeqHash {
  std::size_t operator()(const std::vector<CharId>& v) const noexcept;
};

// stem -> distinct characters observed immediately after it. A stem maps to
// an empty set when every word carrying it is exactly stem_length long.
using StemIndex =
    std::unordered_map<std::vector<CharId>, std::set<CharId>, CharSeqHash>;

// Deduplicated, order-preserving word list with an interned character
// vocabulary and the stem index. Immutable after construction; safe for
// concurrent reads.
class Lexicon {
public:
  // One word per line, surrounding whitespace trimmed, blank lines skipped,
  // duplicates dropped keeping the first occurrence. Throws DataError with
  // the line number on malformed UTF-8, or when no admissible word remains.
  static Lexicon from_lines(std::istream& in, const LexiconConfig& cfg = {});
  static Lexicon from_words(std::span<const std::string> raw_words,
                            const LexiconConfig& cfg = {});

  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::size_t stem_length() const noexcept { return stem_length_; }
  SegmentMode segment_mode() const noexcept { return mode_; }

  std::size_t char_vocab_size() const noexcept { return forms_.size(); }
  const std::string& char_form(CharId id) const { return forms_.at(id); }
  std::optional<CharId> find_char(std::string_view cluster) const;

  // |u3|: number of distinct characters following `stem` across all words;
  // 0 for unseen stems. `stem` must have the configured stem length.
  std::size_t diversity(std::span<const CharId> stem) const;

  // First stem_length characters, or nullopt for shorter words.
  std::optional<std::span<const CharId>> stem_of(const Word& w) const;

  const StemIndex& stem_index() const noexcept { return stem_index_; }

  // Same words re-indexed under a different stem length (no re-segmentation).
  Lexicon with_stem_length(std::size_t stem_length) const;

private:
  Lexicon() = default;
  void intern(std::string_view raw);
  void build_stem_index();

  std::vector<Word> words_;
  std::vector<std::string> forms_;  // CharId -> cluster text
  std::unordered_map<std::string, CharId> ids_;
  StemIndex stem_index_;
  std::size_t stem_length_ = 2;
  SegmentMode mode_ = SegmentMode::Grapheme;
};

struct NGram {
  std::array<CharId, 4> ids{};  // slots at and past `n` are zero
  std::uint8_t n = 0;

  friend bool operator==(const NGram&, const NGram&) = default;
};

struct NGramHash {
  std::size_t operator()(const NGram& g) const noexcept;
};

NGram make_ngram(std::initializer_list<CharId> ids);

// Contiguous n-grams of `w` in order, no boundary padding by default: empty
// when the word is shorter than n. Padded mode brackets the word with n-1
// boundary markers on each side. n must be in 1..4.
std::vector<NGram> ngrams(const Word& w, int n, bool pad = false);

}  // namespace dtim
