#pragma once

// Deterministic random instances shared by the unit and acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "dtim/lexicon.hpp"
#include "dtim/ngram_model.hpp"
#include "dtim/scores.hpp"

namespace dtim::testsupport {

inline std::vector<std::string> random_words(std::mt19937_64& rng,
                                             std::size_t count,
                                             std::size_t alphabet,
                                             std::size_t min_len,
                                             std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> ch(0, static_cast<int>(alphabet) - 1);
  std::vector<std::string> words;
  words.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string w;
    const std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) {
      w.push_back(static_cast<char>('a' + ch(rng)));
    }
    words.push_back(std::move(w));
  }
  return words;
}

// Guarantees at least one word long enough for order-`n` grams.
inline Lexicon random_lexicon(std::mt19937_64& rng, std::size_t count, int n,
                              std::size_t alphabet = 6,
                              std::size_t min_len = 1,
                              std::size_t max_len = 6) {
  auto words = random_words(rng, count, alphabet, min_len, max_len);
  while (true) {
    bool ok = false;
    for (const auto& w : words) ok = ok || w.size() >= static_cast<std::size_t>(n);
    if (ok) break;
    words = random_words(rng, count, alphabet, min_len, max_len);
  }
  return Lexicon::from_words(words, {2, SegmentMode::Grapheme});
}

// Scores bounded away from 0 and 1 keep gradient checks well conditioned.
inline std::vector<ScorePair> random_pairs(std::mt19937_64& rng,
                                           std::size_t count, double lo = 0.2,
                                           double hi = 0.8) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<ScorePair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double w = u(rng);
    out.push_back({w, 1.0 - w});
  }
  return out;
}

// Entries bounded below by 0.3/size before normalization.
inline NGramDistribution random_distribution(std::mt19937_64& rng,
                                             const NGramVocab& vocab) {
  std::uniform_real_distribution<double> u(0.3, 1.0);
  NGramDistribution d;
  d.probs.resize(vocab.size());
  double sum = 0.0;
  for (double& p : d.probs) {
    p = u(rng);
    sum += p;
  }
  for (double& p : d.probs) p /= sum;
  return d;
}

}  // namespace dtim::testsupport
