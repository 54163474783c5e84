#pragma once

#include <span>
#include <vector>

#include "dtim/ngram_model.hpp"

// Inner loops of the optimizer, each in a serial reference form and an
// OpenMP form. The parallel forms partition the word list into contiguous
// per-thread blocks and combine partial results in block order, so output
// is bit-identical across runs at a fixed thread count and identical to the
// serial form when one thread runs. The unqualified entry points dispatch
// on lexicon size.
namespace dtim::kernels {

// Which pair component drives the distribution being estimated.
enum class Role { Native, Translit };

// Unnormalized fixed-point masses for one distribution update.
// ratio[g] must hold other(g) / previous(g).
std::vector<double> accumulate_masses_serial(const NGramVocab& vocab,
                                             std::span<const ScorePair> scores,
                                             std::span<const double> ratio,
                                             Role role);
std::vector<double> accumulate_masses_parallel(
    const NGramVocab& vocab, std::span<const ScorePair> scores,
    std::span<const double> ratio, Role role);
std::vector<double> accumulate_masses(const NGramVocab& vocab,
                                      std::span<const ScorePair> scores,
                                      std::span<const double> ratio, Role role);

// One score refinement per word; words without grams keep their pair.
std::vector<ScorePair> update_scores_serial(const NGramVocab& vocab,
                                            std::span<const ScorePair> prev,
                                            const NGramDistribution& native,
                                            const NGramDistribution& translit);
std::vector<ScorePair> update_scores_parallel(
    const NGramVocab& vocab, std::span<const ScorePair> prev,
    const NGramDistribution& native, const NGramDistribution& translit);
std::vector<ScorePair> update_scores(const NGramVocab& vocab,
                                     std::span<const ScorePair> prev,
                                     const NGramDistribution& native,
                                     const NGramDistribution& translit);

// Sum over words and their grams of ln(nat^2 a(g) + tra^2 b(g)).
double mixture_log_likelihood_serial(const NGramVocab& vocab,
                                     std::span<const ScorePair> scores,
                                     std::span<const double> a,
                                     std::span<const double> b);
double mixture_log_likelihood_parallel(const NGramVocab& vocab,
                                       std::span<const ScorePair> scores,
                                       std::span<const double> a,
                                       std::span<const double> b);
double mixture_log_likelihood(const NGramVocab& vocab,
                              std::span<const ScorePair> scores,
                              std::span<const double> a,
                              std::span<const double> b);

// Dispatch cutoff (word count) and the block count the parallel forms use.
std::size_t parallel_cutoff() noexcept;
int block_count() noexcept;

}  // namespace dtim::kernels
