#include "dtim/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <unordered_set>

namespace dtim {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv_step(std::uint64_t h, std::uint64_t v) {
  h ^= v;
  return h * kFnvPrime;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::size_t CharSeqHash::operator()(const std::vector<CharId>& v) const noexcept {
  std::uint64_t h = kFnvOffset;
  for (CharId id : v) h = fnv_step(h, id);
  return static_cast<std::size_t>(h);
}

std::size_t NGramHash::operator()(const NGram& g) const noexcept {
  std::uint64_t h = fnv_step(kFnvOffset, g.n);
  for (int i = 0; i < g.n; ++i) h = fnv_step(h, g.ids[i]);
  return static_cast<std::size_t>(h);
}

NGram make_ngram(std::initializer_list<CharId> ids) {
  NGram g;
  g.n = static_cast<std::uint8_t>(ids.size());
  std::size_t i = 0;
  for (CharId id : ids) g.ids[i++] = id;
  return g;
}

void Lexicon::intern(std::string_view raw) {
  Word w;
  w.raw.assign(raw);
  for (std::string_view cluster : segment(raw, mode_)) {
    auto it = ids_.find(std::string(cluster));
    CharId id;
    if (it == ids_.end()) {
      id = static_cast<CharId>(forms_.size());
      forms_.emplace_back(cluster);
      ids_.emplace(forms_.back(), id);
    } else {
      id = it->second;
    }
    w.chars.push_back(id);
  }
  words_.push_back(std::move(w));
}

void Lexicon::build_stem_index() {
  stem_index_.clear();
  for (const Word& w : words_) {
    if (w.length() < stem_length_) continue;
    std::vector<CharId> stem(w.chars.begin(), w.chars.begin() + stem_length_);
    auto& successors = stem_index_[std::move(stem)];
    if (w.length() > stem_length_) successors.insert(w.chars[stem_length_]);
  }
}

Lexicon Lexicon::from_lines(std::istream& in, const LexiconConfig& cfg) {
  if (cfg.stem_length < 1) throw ModelError("stem length must be at least 1");
  Lexicon lex;
  lex.stem_length_ = cfg.stem_length;
  lex.mode_ = cfg.segment_mode;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view word = trim(line);
    if (word.empty()) continue;
    if (!seen.emplace(word).second) continue;
    try {
      lex.intern(word);
    } catch (const Utf8Error& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (lex.words_.empty()) throw DataError("no admissible words in input");
  lex.build_stem_index();
  return lex;
}

Lexicon Lexicon::from_words(std::span<const std::string> raw_words,
                            const LexiconConfig& cfg) {
  if (cfg.stem_length < 1) throw ModelError("stem length must be at least 1");
  Lexicon lex;
  lex.stem_length_ = cfg.stem_length;
  lex.mode_ = cfg.segment_mode;
  std::unordered_set<std::string> seen;
  for (const std::string& raw : raw_words) {
    const std::string_view word = trim(raw);
    if (word.empty()) continue;
    if (!seen.emplace(word).second) continue;
    lex.intern(word);
  }
  if (lex.words_.empty()) throw DataError("no admissible words in input");
  lex.build_stem_index();
  return lex;
}

std::optional<CharId> Lexicon::find_char(std::string_view cluster) const {
  auto it = ids_.find(std::string(cluster));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t Lexicon::diversity(std::span<const CharId> stem) const {
  std::vector<CharId> key(stem.begin(), stem.end());
  auto it = stem_index_.find(key);
  return it == stem_index_.end() ? 0 : it->second.size();
}

std::optional<std::span<const CharId>> Lexicon::stem_of(const Word& w) const {
  if (w.length() < stem_length_) return std::nullopt;
  return std::span<const CharId>(w.chars.data(), stem_length_);
}

Lexicon Lexicon::with_stem_length(std::size_t stem_length) const {
  if (stem_length < 1) throw ModelError("stem length must be at least 1");
  Lexicon lex;
  lex.words_ = words_;
  lex.forms_ = forms_;
  lex.ids_ = ids_;
  lex.mode_ = mode_;
  lex.stem_length_ = stem_length;
  lex.build_stem_index();
  return lex;
}

std::vector<NGram> ngrams(const Word& w, int n, bool pad) {
  if (n < 1 || n > 4) throw ModelError("n-gram order must be in 1..4");
  std::vector<NGram> out;
  const auto window = static_cast<std::size_t>(n);
  if (!pad) {
    if (w.length() < window) return out;
    out.reserve(w.length() - window + 1);
    for (std::size_t i = 0; i + window <= w.length(); ++i) {
      NGram g;
      g.n = static_cast<std::uint8_t>(n);
      for (std::size_t j = 0; j < window; ++j) g.ids[j] = w.chars[i + j];
      out.push_back(g);
    }
    return out;
  }
  // n-1 boundary markers on each side; every non-empty word yields
  // length + n - 1 grams.
  std::vector<CharId> padded;
  padded.reserve(w.length() + 2 * (window - 1));
  padded.insert(padded.end(), window - 1, kBoundaryChar);
  padded.insert(padded.end(), w.chars.begin(), w.chars.end());
  padded.insert(padded.end(), window - 1, kBoundaryChar);
  if (padded.size() < window) return out;
  out.reserve(padded.size() - window + 1);
  for (std::size_t i = 0; i + window <= padded.size(); ++i) {
    NGram g;
    g.n = static_cast<std::uint8_t>(n);
    for (std::size_t j = 0; j < window; ++j) g.ids[j] = padded[i + j];
    out.push_back(g);
  }
  return out;
}

}  // namespace dtim
