#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dtim/init_scores.hpp"
#include "dtim/lexicon.hpp"

namespace dtim {

// Interpolated unigram/bigram character language model over a lexicon.
// Maximum-likelihood counts, no smoothing inside either model: the
// interpolation is the smoothing.
struct CharLanguageModel {
  std::vector<double> unigram;  // per CharId
  // per context character: successors sorted by id with their conditional
  // probability; rows sum to 1 for contexts that have successors
  std::vector<std::vector<std::pair<CharId, double>>> bigram;
  double lambda = 0.8;

  double unigram_prob(CharId c) const;
  double bigram_prob(CharId context, CharId next) const;  // 0 when unseen
};

CharLanguageModel train_char_lm(const Lexicon& lex, double lambda = 0.8);

// Log of the word's support under the interpolated model,
//   sum over pairs of ln(lambda B(c2|c1) + (1-lambda) U(c2)),
// unnormalized: longer words score lower. Single-character words fall back
// to ln U(c) so they remain rankable instead of all tying at the empty
// product. `length_normalized` divides by the pair count instead.
// The word must come from the training lexicon; unknown characters throw.
double gen_score(const Word& w, const CharLanguageModel& lm,
                 bool length_normalized = false);

std::vector<double> gen_scores(const Lexicon& lex, const CharLanguageModel& lm,
                               bool length_normalized = false);

// The diversity initialization used directly as a ranking.
std::vector<double> init_baseline(const Lexicon& lex,
                                  const InitConfig& cfg = {});

}  // namespace dtim
