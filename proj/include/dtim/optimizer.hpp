#pragma once

#include <span>
#include <vector>

#include "dtim/init_scores.hpp"
#include "dtim/lexicon.hpp"
#include "dtim/ngram_model.hpp"

namespace dtim {

struct DtimConfig {
  int n = 2;           // n-gram order, 1..4
  int tau = 10;        // diversity saturation for the initialization
  std::size_t stem_length = 2;
  int max_iters = 100;
  double convergence_eps = 1e-4;  // L-infinity threshold on score change
  double neutral_score = 0.5;     // initialization for words without a stem
  double prob_floor = 1e-10;
  bool pad_boundaries = false;
  // Estimate the transliterable model against the freshly updated native
  // model (default) or against the previous iteration's. The previous-
  // estimate variant makes one iteration exactly symmetric under the
  // native/transliterable relabeling.
  bool translit_against_fresh_native = true;

  InitConfig init_config() const { return {tau, neutral_score}; }
  void validate() const;  // throws ModelError
};

struct IterationStats {
  double objective_max = 0.0;
  double objective_min = 0.0;
  double max_score_delta = 0.0;

  friend bool operator==(const IterationStats&, const IterationStats&) =
      default;
};

struct DtimState {
  std::vector<ScorePair> scores;  // aligned with lexicon word order
  NGramDistribution native;
  NGramDistribution translit;
};

struct DtimResult {
  std::vector<double> scores;
  NGramDistribution native_dist;
  NGramDistribution translit_dist;
  int iterations_run = 0;
  bool converged = false;
  std::vector<IterationStats> trace;  // one entry per iteration, post-update
  // false: the word has no n-grams at this order; it kept its initial
  // score and never contributed to the distributions.
  std::vector<bool> scored;
};

// Sum over words and their grams of ln(w^2 N(g) + (1-w)^2 T(g)). Words
// shorter than n contribute nothing.
double objective_max(const NGramVocab& vocab, std::span<const ScorePair> scores,
                     const NGramDistribution& native,
                     const NGramDistribution& translit);
// Same with the weight roles swapped: ln((1-w)^2 N(g) + w^2 T(g)).
double objective_min(const NGramVocab& vocab, std::span<const ScorePair> scores,
                     const NGramDistribution& native,
                     const NGramDistribution& translit);
double objective_max(const NGramVocab& vocab, std::span<const double> scores,
                     const NGramDistribution& native,
                     const NGramDistribution& translit);
double objective_min(const NGramVocab& vocab, std::span<const double> scores,
                     const NGramDistribution& native,
                     const NGramDistribution& translit);

// One score refinement, previous estimates in the denominators. Words
// without grams keep their pair. Every output component lies in [0,1].
std::vector<ScorePair> update_scores(const NGramVocab& vocab,
                                     std::span<const ScorePair> prev,
                                     const NGramDistribution& native,
                                     const NGramDistribution& translit);
std::vector<double> update_scores(const NGramVocab& vocab,
                                  std::span<const double> prev,
                                  const NGramDistribution& native,
                                  const NGramDistribution& translit);

// Slope of objective_min with respect to one word's score; zero exactly at
// the score-update fixed point. Test diagnostic.
double score_gradient(const NGramVocab& vocab, std::size_t word_index,
                      double w_n, const NGramDistribution& native,
                      const NGramDistribution& translit);

// Curvature of objective_min at one word's score. Expected positive, but
// can go negative when the models disagree strongly on the word's
// characters; logged, never asserted.
double positivity_check(const NGramVocab& vocab, std::size_t word_index,
                        double w_n, const NGramDistribution& native,
                        const NGramDistribution& translit);

// Diversity-initialized scores with uniform distributions.
DtimState initial_state(const Lexicon& lex, const NGramVocab& vocab,
                        const DtimConfig& cfg);

// One full iteration in place: native update, transliterable update, score
// update. Returns the post-update objectives and the score movement.
IterationStats dtim_step(DtimState& state, const NGramVocab& vocab,
                         const DtimConfig& cfg);

// Relabeled state: weight components swapped, distributions exchanged.
DtimState mirrored(const DtimState& state);

// Full alternating optimization until the score change drops below
// convergence_eps or max_iters is reached.
DtimResult run(const Lexicon& lex, const DtimConfig& cfg = {});

}  // namespace dtim
