#include "dtim/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "dtim/kernels.hpp"

namespace dtim {

void DtimConfig::validate() const {
  if (n < 1 || n > 4) throw ModelError("n-gram order must be in 1..4");
  if (stem_length < 1) throw ModelError("stem length must be at least 1");
  if (max_iters < 1) throw ModelError("max iterations must be at least 1");
  if (!(convergence_eps > 0.0)) {
    throw ModelError("convergence threshold must be positive");
  }
  if (!(prob_floor > 0.0 && prob_floor < 1.0)) {
    throw ModelError("probability floor must lie in (0,1)");
  }
  init_config().validate();
}

double objective_max(const NGramVocab& vocab, std::span<const ScorePair> scores,
                     const NGramDistribution& native,
                     const NGramDistribution& translit) {
  return kernels::mixture_log_likelihood(vocab, scores, native.probs,
                                         translit.probs);
}

double objective_min(const NGramVocab& vocab, std::span<const ScorePair> scores,
                     const NGramDistribution& native,
                     const NGramDistribution& translit) {
  // (1-w)^2 N + w^2 T is the mirror mixture: swap the model arguments.
  return kernels::mixture_log_likelihood(vocab, scores, translit.probs,
                                         native.probs);
}

double objective_max(const NGramVocab& vocab, std::span<const double> scores,
                     const NGramDistribution& native,
                     const NGramDistribution& translit) {
  return objective_max(vocab, std::span<const ScorePair>(make_pairs(scores)),
                       native, translit);
}

double objective_min(const NGramVocab& vocab, std::span<const double> scores,
                     const NGramDistribution& native,
                     const NGramDistribution& translit) {
  return objective_min(vocab, std::span<const ScorePair>(make_pairs(scores)),
                       native, translit);
}

std::vector<ScorePair> update_scores(const NGramVocab& vocab,
                                     std::span<const ScorePair> prev,
                                     const NGramDistribution& native,
                                     const NGramDistribution& translit) {
  return kernels::update_scores(vocab, prev, native, translit);
}

std::vector<double> update_scores(const NGramVocab& vocab,
                                  std::span<const double> prev,
                                  const NGramDistribution& native,
                                  const NGramDistribution& translit) {
  return nativeness(update_scores(
      vocab, std::span<const ScorePair>(make_pairs(prev)), native, translit));
}

double score_gradient(const NGramVocab& vocab, std::size_t word_index,
                      double w_n, const NGramDistribution& native,
                      const NGramDistribution& translit) {
  const double om = 1.0 - w_n;
  double slope = 0.0;
  for (GramIndex g : vocab.word_grams(word_index)) {
    const double pn = native.probs[g];
    const double pt = translit.probs[g];
    const double mix = w_n * w_n * pt + om * om * pn;
    slope += (2.0 * w_n * pt + 2.0 * w_n * pn - 2.0 * pn) / mix;
  }
  return slope;
}

double positivity_check(const NGramVocab& vocab, std::size_t word_index,
                        double w_n, const NGramDistribution& native,
                        const NGramDistribution& translit) {
  const double om = 1.0 - w_n;
  double total = 0.0;
  for (GramIndex g : vocab.word_grams(word_index)) {
    const double pn = native.probs[g];
    const double pt = translit.probs[g];
    const double mix = w_n * w_n * pt + om * om * pn;
    const double imbalance = w_n * pt - om * pn;
    total += (pn * pt - imbalance * imbalance) / (mix * mix);
  }
  return total;
}

DtimState initial_state(const Lexicon& lex, const NGramVocab& vocab,
                        const DtimConfig& cfg) {
  DtimState state;
  state.scores = make_pairs(init_scores(lex, cfg.init_config()));
  state.native = uniform_distribution(vocab, cfg.prob_floor);
  state.translit = state.native;
  return state;
}

IterationStats dtim_step(DtimState& state, const NGramVocab& vocab,
                         const DtimConfig& cfg) {
  NGramDistribution native =
      update_native(vocab, state.scores, state.native, state.translit);
  const NGramDistribution& against =
      cfg.translit_against_fresh_native ? native : state.native;
  NGramDistribution translit =
      update_translit(vocab, state.scores, against, state.translit);
  std::vector<ScorePair> scores =
      kernels::update_scores(vocab, state.scores, native, translit);

  IterationStats stats;
  for (std::size_t w = 0; w < scores.size(); ++w) {
    const ScorePair& s = scores[w];
    if (!(s.nat >= 0.0 && s.nat <= 1.0 && s.tra >= 0.0 && s.tra <= 1.0)) {
      throw ModelError("score escaped [0,1] for word " + std::to_string(w));
    }
    stats.max_score_delta = std::max(
        stats.max_score_delta, std::abs(s.nat - state.scores[w].nat));
  }

  state.scores = std::move(scores);
  state.native = std::move(native);
  state.translit = std::move(translit);
  stats.objective_max =
      objective_max(vocab, state.scores, state.native, state.translit);
  stats.objective_min =
      objective_min(vocab, state.scores, state.native, state.translit);
  return stats;
}

DtimState mirrored(const DtimState& state) {
  DtimState out;
  out.scores = mirrored(std::span<const ScorePair>(state.scores));
  out.native = state.translit;
  out.translit = state.native;
  return out;
}

DtimResult run(const Lexicon& lex, const DtimConfig& cfg) {
  cfg.validate();
  if (lex.size() == 0) throw ModelError("empty lexicon");
  if (lex.stem_length() != cfg.stem_length) {
    throw ModelError("lexicon stem length does not match the configuration");
  }
  const NGramVocab vocab(lex, cfg.n, cfg.pad_boundaries);
  DtimState state = initial_state(lex, vocab, cfg);

  DtimResult result;
  result.trace.reserve(cfg.max_iters);
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const IterationStats stats = dtim_step(state, vocab, cfg);
    result.trace.push_back(stats);
    result.iterations_run = iter + 1;
    if (stats.max_score_delta < cfg.convergence_eps) {
      result.converged = true;
      break;
    }
  }

  result.scores = nativeness(state.scores);
  result.native_dist = std::move(state.native);
  result.translit_dist = std::move(state.translit);
  result.scored.resize(lex.size());
  for (std::size_t w = 0; w < lex.size(); ++w) {
    result.scored[w] = !vocab.word_grams(w).empty();
  }
  return result;
}

}  // namespace dtim
