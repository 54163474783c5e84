#pragma once

#include <vector>

#include "dtim/lexicon.hpp"

namespace dtim {

// Initial scores saturate at this value so that even the most diverse stems
// keep a sliver of transliterable-ness.
inline constexpr double kInitCap = 0.99;

struct InitConfig {
  int tau = 10;                // diversity saturation threshold
  double neutral_score = 0.5;  // words too short to carry a stem

  void validate() const;  // throws ModelError
};

// Diversity-based initialization: min(0.99, |u3(stem)| / tau) for every word
// long enough to carry a stem, neutral_score otherwise. Output is indexed
// like lex.words(). Deterministic; trivially parallel per word.
std::vector<double> init_scores(const Lexicon& lex, const InitConfig& cfg = {});

}  // namespace dtim
