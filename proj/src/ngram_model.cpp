#include "dtim/ngram_model.hpp"

#include <algorithm>
#include <cassert>

#include "dtim/kernels.hpp"

namespace dtim {

NGramVocab::NGramVocab(const Lexicon& lex, int n, bool pad) : n_(n), pad_(pad) {
  if (n < 1 || n > 4) throw ModelError("n-gram order must be in 1..4");
  offsets_.reserve(lex.size() + 1);
  offsets_.push_back(0);
  for (const Word& w : lex.words()) {
    for (const NGram& g : ngrams(w, n, pad)) {
      auto [it, inserted] =
          index_.emplace(g, static_cast<GramIndex>(grams_.size()));
      if (inserted) grams_.push_back(g);
      flat_.push_back(it->second);
    }
    offsets_.push_back(flat_.size());
  }
  if (grams_.empty()) {
    throw ModelError("empty n-gram vocabulary: no word has length >= " +
                     std::to_string(n));
  }
}

std::optional<GramIndex> NGramVocab::find(const NGram& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string NGramVocab::render(GramIndex g, const Lexicon& lex) const {
  std::string out;
  const NGram& gram = grams_[g];
  for (int i = 0; i < gram.n; ++i) {
    if (gram.ids[i] == kBoundaryChar) {
      out.push_back('#');
    } else {
      out += lex.char_form(gram.ids[i]);
    }
  }
  return out;
}

NGramDistribution uniform_distribution(const NGramVocab& vocab, double floor) {
  if (vocab.size() == 0) throw ModelError("empty n-gram vocabulary");
  NGramDistribution d;
  d.floor = floor;
  d.probs.assign(vocab.size(), 1.0 / static_cast<double>(vocab.size()));
  return d;
}

namespace {

// Normalize in place, keeping every entry at or above the floor. Raising
// entries perturbs the sum, so alternate until both conditions hold; the
// clamped set only grows, which bounds the loop.
void normalize_with_floor(std::vector<double>& p, double floor) {
  for (std::size_t round = 0; round <= p.size() + 1; ++round) {
    double sum = 0.0;
    for (double x : p) sum += x;
    for (double& x : p) x /= sum;
    double mn = p[0];
    for (double x : p) mn = std::min(mn, x);
    if (mn >= floor) return;
    for (double& x : p) x = std::max(x, floor);
  }
  assert(false && "floor normalization did not settle");
}

NGramDistribution estimate(const NGramVocab& vocab,
                           std::span<const ScorePair> scores,
                           const NGramDistribution& prev,
                           const NGramDistribution& other,
                           kernels::Role role) {
  std::vector<double> ratio(vocab.size());
  for (std::size_t g = 0; g < vocab.size(); ++g) {
    ratio[g] = other.probs[g] / prev.probs[g];
  }
  std::vector<double> masses =
      kernels::accumulate_masses(vocab, scores, ratio, role);
  double total = 0.0;
  for (double m : masses) total += m;
  if (total == 0.0) return prev;  // every driving weight was exactly zero
  normalize_with_floor(masses, prev.floor);
  NGramDistribution out;
  out.floor = prev.floor;
  out.probs = std::move(masses);
  return out;
}

}  // namespace

NGramDistribution update_native(const NGramVocab& vocab,
                                std::span<const ScorePair> scores,
                                const NGramDistribution& prev_native,
                                const NGramDistribution& translit) {
  return estimate(vocab, scores, prev_native, translit,
                  kernels::Role::Native);
}

NGramDistribution update_translit(const NGramVocab& vocab,
                                  std::span<const ScorePair> scores,
                                  const NGramDistribution& native,
                                  const NGramDistribution& prev_translit) {
  return estimate(vocab, scores, prev_translit, native,
                  kernels::Role::Translit);
}

NGramDistribution update_native(const NGramVocab& vocab,
                                std::span<const double> scores,
                                const NGramDistribution& prev_native,
                                const NGramDistribution& translit) {
  return update_native(vocab, std::span<const ScorePair>(make_pairs(scores)),
                       prev_native, translit);
}

NGramDistribution update_translit(const NGramVocab& vocab,
                                  std::span<const double> scores,
                                  const NGramDistribution& native,
                                  const NGramDistribution& prev_translit) {
  return update_translit(vocab, std::span<const ScorePair>(make_pairs(scores)),
                         native, prev_translit);
}

double native_gradient(const NGramVocab& vocab,
                       std::span<const ScorePair> scores,
                       const NGramDistribution& native,
                       const NGramDistribution& translit, const NGram& g) {
  const auto idx = vocab.find(g);
  if (!idx) return 0.0;
  const double pn = native.probs[*idx];
  const double pt = translit.probs[*idx];
  double slope = 0.0;
  for (std::size_t w = 0; w < vocab.word_count(); ++w) {
    std::size_t freq = 0;
    for (GramIndex occ : vocab.word_grams(w)) freq += occ == *idx;
    if (freq == 0) continue;
    const double nsq = scores[w].nat * scores[w].nat;
    const double tsq = scores[w].tra * scores[w].tra;
    slope += static_cast<double>(freq) * nsq / (nsq * pn + tsq * pt);
  }
  return slope;
}

double concavity_check(const NGramVocab& vocab,
                       std::span<const ScorePair> scores,
                       const NGramDistribution& native,
                       const NGramDistribution& translit, const NGram& g) {
  const auto idx = vocab.find(g);
  if (!idx) return 0.0;
  const double pn = native.probs[*idx];
  const double pt = translit.probs[*idx];
  double total = 0.0;
  for (std::size_t w = 0; w < vocab.word_count(); ++w) {
    std::size_t freq = 0;
    for (GramIndex occ : vocab.word_grams(w)) freq += occ == *idx;
    if (freq == 0) continue;
    const double nsq = scores[w].nat * scores[w].nat;
    const double tsq = scores[w].tra * scores[w].tra;
    const double mix = nsq * pn + tsq * pt;
    total += static_cast<double>(freq) * nsq * nsq / (mix * mix);
  }
  return -total;
}

}  // namespace dtim
