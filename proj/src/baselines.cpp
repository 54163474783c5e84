#include "dtim/baselines.hpp"

#include <algorithm>
#include <cmath>

namespace dtim {

double CharLanguageModel::unigram_prob(CharId c) const {
  if (c >= unigram.size()) throw DataError("character outside the model vocabulary");
  return unigram[c];
}

double CharLanguageModel::bigram_prob(CharId context, CharId next) const {
  if (context >= bigram.size()) throw DataError("character outside the model vocabulary");
  const auto& row = bigram[context];
  auto it = std::lower_bound(
      row.begin(), row.end(), next,
      [](const std::pair<CharId, double>& e, CharId v) { return e.first < v; });
  if (it == row.end() || it->first != next) return 0.0;
  return it->second;
}

CharLanguageModel train_char_lm(const Lexicon& lex, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ModelError("interpolation weight must lie in [0,1]");
  }
  const std::size_t vocab = lex.char_vocab_size();
  CharLanguageModel lm;
  lm.lambda = lambda;
  std::vector<std::size_t> uni_counts(vocab, 0);
  std::vector<std::size_t> ctx_counts(vocab, 0);
  std::vector<std::unordered_map<CharId, std::size_t>> pair_counts(vocab);
  std::size_t total = 0;
  for (const Word& w : lex.words()) {
    for (std::size_t i = 0; i < w.length(); ++i) {
      ++uni_counts[w.chars[i]];
      ++total;
      if (i + 1 < w.length()) {
        ++ctx_counts[w.chars[i]];
        ++pair_counts[w.chars[i]][w.chars[i + 1]];
      }
    }
  }
  lm.unigram.resize(vocab);
  for (std::size_t c = 0; c < vocab; ++c) {
    lm.unigram[c] = static_cast<double>(uni_counts[c]) / total;
  }
  lm.bigram.resize(vocab);
  for (std::size_t c = 0; c < vocab; ++c) {
    auto& row = lm.bigram[c];
    row.reserve(pair_counts[c].size());
    for (const auto& [next, count] : pair_counts[c]) {
      row.emplace_back(next,
                       static_cast<double>(count) / ctx_counts[c]);
    }
    std::sort(row.begin(), row.end());
  }
  return lm;
}

double gen_score(const Word& w, const CharLanguageModel& lm,
                 bool length_normalized) {
  if (w.length() == 0) throw DataError("cannot score an empty word");
  if (w.length() == 1) return std::log(lm.unigram_prob(w.chars[0]));
  double score = 0.0;
  for (std::size_t i = 0; i + 1 < w.length(); ++i) {
    const double b = lm.bigram_prob(w.chars[i], w.chars[i + 1]);
    const double u = lm.unigram_prob(w.chars[i + 1]);
    score += std::log(lm.lambda * b + (1.0 - lm.lambda) * u);
  }
  if (length_normalized) score /= static_cast<double>(w.length() - 1);
  return score;
}

std::vector<double> gen_scores(const Lexicon& lex, const CharLanguageModel& lm,
                               bool length_normalized) {
  std::vector<double> out;
  out.reserve(lex.size());
  for (const Word& w : lex.words()) {
    out.push_back(gen_score(w, lm, length_normalized));
  }
  return out;
}

std::vector<double> init_baseline(const Lexicon& lex, const InitConfig& cfg) {
  return init_scores(lex, cfg);
}

}  // namespace dtim
