#include "dtim/synth.hpp"

#include <cmath>
#include <random>
#include <unordered_set>

#include "dtim/text.hpp"

namespace dtim {

namespace {

// First 26 characters are ASCII letters for readability; the rest walk the
// CJK unified block, one codepoint (and one grapheme cluster) each.
std::string alphabet_char(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return encode_utf8(static_cast<char32_t>(0x4E00 + index - 26));
}

// Unbiased-enough bounded draw that does not depend on the standard
// library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

}  // namespace

void SynthConfig::validate() const {
  if (native_alphabet == 0 || translit_alphabet == 0) {
    throw DataError("alphabets must be non-empty");
  }
  if (native_alphabet > 5000 || translit_alphabet > 5000) {
    throw DataError("alphabets larger than 5000 characters are not supported");
  }
  if (native_count == 0 || translit_count == 0) {
    throw DataError("word counts must be positive");
  }
  if (min_length == 0 || min_length > max_length) {
    throw DataError("need 1 <= min length <= max length");
  }
  if (!(overlap >= 0.0 && overlap <= 1.0)) {
    throw DataError("overlap must lie in [0,1]");
  }
}

SynthData generate_synthetic(const SynthConfig& cfg) {
  cfg.validate();
  const std::size_t shared = static_cast<std::size_t>(std::lround(
      cfg.overlap *
      static_cast<double>(std::min(cfg.native_alphabet, cfg.translit_alphabet))));

  std::vector<std::string> native_chars;
  std::vector<std::string> translit_chars;
  for (std::size_t k = 0; k < cfg.native_alphabet; ++k) {
    native_chars.push_back(alphabet_char(k));
  }
  // the transliterable alphabet starts `shared` characters before the end
  // of the native one
  for (std::size_t k = 0; k < cfg.translit_alphabet; ++k) {
    translit_chars.push_back(
        alphabet_char(cfg.native_alphabet - shared + k));
  }

  std::mt19937_64 rng(cfg.seed);
  SynthData data;
  std::unordered_set<std::string> seen;
  const auto emit_class = [&](const std::vector<std::string>& chars,
                              std::size_t count, Label label) {
    std::size_t made = 0;
    std::size_t attempts = 0;
    const std::size_t attempt_cap = 200 * count + 1000;
    while (made < count) {
      if (++attempts > attempt_cap) {
        throw DataError("could not draw enough distinct words; "
                        "enlarge the alphabet or the length range");
      }
      const std::size_t len =
          cfg.min_length + bounded(rng, cfg.max_length - cfg.min_length + 1);
      std::string word;
      for (std::size_t i = 0; i < len; ++i) {
        word += chars[bounded(rng, chars.size())];
      }
      if (!seen.insert(word).second) continue;
      data.words.push_back(word);
      data.labels.emplace_back(std::move(word), label);
      ++made;
    }
  };
  emit_class(native_chars, cfg.native_count, Label::Native);
  emit_class(translit_chars, cfg.translit_count, Label::Transliterable);
  return data;
}

}  // namespace dtim
