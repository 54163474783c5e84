#include "dtim/kernels.hpp"

#include <cmath>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dtim::kernels {

namespace {

constexpr std::size_t kParallelCutoff = 4096;

std::pair<double, double> role_weights(const ScorePair& s, Role role) {
  return role == Role::Native ? std::pair{s.nat, s.tra}
                              : std::pair{s.tra, s.nat};
}

void accumulate_block(const NGramVocab& vocab,
                      std::span<const ScorePair> scores,
                      std::span<const double> ratio, Role role,
                      std::size_t begin, std::size_t end,
                      std::span<double> masses) {
  for (std::size_t w = begin; w < end; ++w) {
    const auto [p, q] = role_weights(scores[w], role);
    const double psq = p * p;
    const double qsq = q * q;
    for (GramIndex g : vocab.word_grams(w)) {
      masses[g] += psq / (psq + qsq * ratio[g]);
    }
  }
}

ScorePair refine_score(const NGramVocab& vocab, std::size_t w,
                       const ScorePair& prev, const NGramDistribution& native,
                       const NGramDistribution& translit) {
  const auto grams = vocab.word_grams(w);
  if (grams.empty()) return prev;
  const double nsq = prev.nat * prev.nat;
  const double tsq = prev.tra * prev.tra;
  double num_native = 0.0;
  double num_translit = 0.0;
  for (GramIndex g : grams) {
    const double pn = native.probs[g];
    const double pt = translit.probs[g];
    // previous estimates in the denominator
    const double d = nsq * pt + tsq * pn;
    num_native += pn / d;
    num_translit += pt / d;
  }
  const double den = num_native + num_translit;
  return {num_native / den, num_translit / den};
}

double log_likelihood_block(const NGramVocab& vocab,
                            std::span<const ScorePair> scores,
                            std::span<const double> a,
                            std::span<const double> b, std::size_t begin,
                            std::size_t end) {
  double total = 0.0;
  for (std::size_t w = begin; w < end; ++w) {
    const double nsq = scores[w].nat * scores[w].nat;
    const double tsq = scores[w].tra * scores[w].tra;
    for (GramIndex g : vocab.word_grams(w)) {
      total += std::log(nsq * a[g] + tsq * b[g]);
    }
  }
  return total;
}

}  // namespace

std::size_t parallel_cutoff() noexcept { return kParallelCutoff; }

int block_count() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<double> accumulate_masses_serial(const NGramVocab& vocab,
                                             std::span<const ScorePair> scores,
                                             std::span<const double> ratio,
                                             Role role) {
  std::vector<double> masses(vocab.size(), 0.0);
  accumulate_block(vocab, scores, ratio, role, 0, vocab.word_count(), masses);
  return masses;
}

std::vector<double> accumulate_masses_parallel(
    const NGramVocab& vocab, std::span<const ScorePair> scores,
    std::span<const double> ratio, Role role) {
  const int nb = block_count();
  if (nb <= 1) return accumulate_masses_serial(vocab, scores, ratio, role);
  const std::size_t words = vocab.word_count();
  std::vector<std::vector<double>> partial(
      nb, std::vector<double>(vocab.size(), 0.0));
#pragma omp parallel for schedule(static)
  for (int t = 0; t < nb; ++t) {
    const std::size_t begin = words * t / nb;
    const std::size_t end = words * (t + 1) / nb;
    accumulate_block(vocab, scores, ratio, role, begin, end, partial[t]);
  }
  std::vector<double> masses = std::move(partial[0]);
  for (int t = 1; t < nb; ++t) {
    for (std::size_t g = 0; g < masses.size(); ++g) masses[g] += partial[t][g];
  }
  return masses;
}

std::vector<double> accumulate_masses(const NGramVocab& vocab,
                                      std::span<const ScorePair> scores,
                                      std::span<const double> ratio,
                                      Role role) {
  if (vocab.word_count() >= kParallelCutoff) {
    return accumulate_masses_parallel(vocab, scores, ratio, role);
  }
  return accumulate_masses_serial(vocab, scores, ratio, role);
}

std::vector<ScorePair> update_scores_serial(const NGramVocab& vocab,
                                            std::span<const ScorePair> prev,
                                            const NGramDistribution& native,
                                            const NGramDistribution& translit) {
  std::vector<ScorePair> out(prev.size());
  for (std::size_t w = 0; w < prev.size(); ++w) {
    out[w] = refine_score(vocab, w, prev[w], native, translit);
  }
  return out;
}

std::vector<ScorePair> update_scores_parallel(
    const NGramVocab& vocab, std::span<const ScorePair> prev,
    const NGramDistribution& native, const NGramDistribution& translit) {
  std::vector<ScorePair> out(prev.size());
  const auto count = static_cast<std::ptrdiff_t>(prev.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t w = 0; w < count; ++w) {
    out[w] = refine_score(vocab, static_cast<std::size_t>(w), prev[w], native,
                          translit);
  }
  return out;
}

std::vector<ScorePair> update_scores(const NGramVocab& vocab,
                                     std::span<const ScorePair> prev,
                                     const NGramDistribution& native,
                                     const NGramDistribution& translit) {
  if (vocab.word_count() >= kParallelCutoff) {
    return update_scores_parallel(vocab, prev, native, translit);
  }
  return update_scores_serial(vocab, prev, native, translit);
}

double mixture_log_likelihood_serial(const NGramVocab& vocab,
                                     std::span<const ScorePair> scores,
                                     std::span<const double> a,
                                     std::span<const double> b) {
  return log_likelihood_block(vocab, scores, a, b, 0, vocab.word_count());
}

double mixture_log_likelihood_parallel(const NGramVocab& vocab,
                                       std::span<const ScorePair> scores,
                                       std::span<const double> a,
                                       std::span<const double> b) {
  const int nb = block_count();
  if (nb <= 1) return mixture_log_likelihood_serial(vocab, scores, a, b);
  const std::size_t words = vocab.word_count();
  std::vector<double> partial(nb, 0.0);
#pragma omp parallel for schedule(static)
  for (int t = 0; t < nb; ++t) {
    const std::size_t begin = words * t / nb;
    const std::size_t end = words * (t + 1) / nb;
    partial[t] = log_likelihood_block(vocab, scores, a, b, begin, end);
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

double mixture_log_likelihood(const NGramVocab& vocab,
                              std::span<const ScorePair> scores,
                              std::span<const double> a,
                              std::span<const double> b) {
  if (vocab.word_count() >= kParallelCutoff) {
    return mixture_log_likelihood_parallel(vocab, scores, a, b);
  }
  return mixture_log_likelihood_serial(vocab, scores, a, b);
}

}  // namespace dtim::kernels
