#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dtim/lexicon.hpp"
#include "dtim/scores.hpp"

namespace dtim {

using GramIndex = std::uint32_t;

inline constexpr double kDefaultProbFloor = 1e-10;

// Dense n-gram vocabulary over a lexicon, with per-word gram occurrence
// lists in CSR layout shared by every kernel. Fixed at construction.
class NGramVocab {
public:
  // Throws ModelError when the lexicon yields no n-grams at this order.
  NGramVocab(const Lexicon& lex, int n, bool pad = false);

  int n() const noexcept { return n_; }
  bool padded() const noexcept { return pad_; }
  std::size_t size() const noexcept { return grams_.size(); }
  std::size_t word_count() const noexcept { return offsets_.size() - 1; }
  std::size_t total_occurrences() const noexcept { return flat_.size(); }

  std::optional<GramIndex> find(const NGram& g) const;
  const NGram& gram(GramIndex g) const { return grams_[g]; }

  // Gram occurrences of one word, in order, multiplicity preserved; empty
  // for words shorter than n (unpadded).
  std::span<const GramIndex> word_grams(std::size_t word_index) const {
    return {flat_.data() + offsets_[word_index],
            offsets_[word_index + 1] - offsets_[word_index]};
  }

  // Concatenated character forms; boundary markers render as '#'.
  std::string render(GramIndex g, const Lexicon& lex) const;

private:
  int n_;
  bool pad_;
  std::vector<NGram> grams_;
  std::unordered_map<NGram, GramIndex, NGramHash> index_;
  std::vector<std::size_t> offsets_;
  std::vector<GramIndex> flat_;
};

// Probability distribution over a vocabulary's n-grams. After construction
// or update: sums to 1 within 1e-9 and no entry is below `floor`.
struct NGramDistribution {
  std::vector<double> probs;
  double floor = kDefaultProbFloor;

  double prob(GramIndex g) const { return probs[g]; }

  friend bool operator==(const NGramDistribution&, const NGramDistribution&) =
      default;
};

NGramDistribution uniform_distribution(const NGramVocab& vocab,
                                       double floor = kDefaultProbFloor);

// One fixed-point refinement of the native model: each gram accumulates
//   freq(g, w) * w_n^2 / (w_n^2 + (1 - w_n)^2 * T(g) / N_prev(g))
// over all words, then the masses are normalized under the probability
// floor. An all-zero mass (every weight exactly 0) returns `prev_native`
// unchanged so the iteration stays total.
NGramDistribution update_native(const NGramVocab& vocab,
                                std::span<const ScorePair> scores,
                                const NGramDistribution& prev_native,
                                const NGramDistribution& translit);

// Mirror image of update_native with the model roles and the weight
// components exchanged.
NGramDistribution update_translit(const NGramVocab& vocab,
                                  std::span<const ScorePair> scores,
                                  const NGramDistribution& native,
                                  const NGramDistribution& prev_translit);

// Plain-score convenience overloads; pairs are built as (w, 1-w).
NGramDistribution update_native(const NGramVocab& vocab,
                                std::span<const double> scores,
                                const NGramDistribution& prev_native,
                                const NGramDistribution& translit);
NGramDistribution update_translit(const NGramVocab& vocab,
                                  std::span<const double> scores,
                                  const NGramDistribution& native,
                                  const NGramDistribution& prev_translit);

// Slope of the mixture log-likelihood with respect to one native-model
// entry, multiplier term omitted: sum_w freq(g,w) w^2 / (w^2 N(g) +
// (1-w)^2 T(g)). Grams absent from the vocabulary contribute 0.
double native_gradient(const NGramVocab& vocab,
                       std::span<const ScorePair> scores,
                       const NGramDistribution& native,
                       const NGramDistribution& translit, const NGram& g);

// Second derivative of the same objective in the same direction; never
// positive, which confirms the update moves toward a maximum. Diagnostic.
double concavity_check(const NGramVocab& vocab,
                       std::span<const ScorePair> scores,
                       const NGramDistribution& native,
                       const NGramDistribution& translit, const NGram& g);

}  // namespace dtim
