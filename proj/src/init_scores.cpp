#include "dtim/init_scores.hpp"

#include <algorithm>

namespace dtim {

void InitConfig::validate() const {
  if (tau < 1) throw ModelError("tau must be at least 1");
  if (!(neutral_score > 0.0 && neutral_score < 1.0)) {
    throw ModelError("neutral score must lie strictly between 0 and 1");
  }
}

std::vector<double> init_scores(const Lexicon& lex, const InitConfig& cfg) {
  cfg.validate();
  std::vector<double> scores;
  scores.reserve(lex.size());
  for (const Word& w : lex.words()) {
    const auto stem = lex.stem_of(w);
    if (!stem) {
      scores.push_back(cfg.neutral_score);
      continue;
    }
    const auto diversity = static_cast<double>(lex.diversity(*stem));
    scores.push_back(std::min(kInitCap, diversity / cfg.tau));
  }
  return scores;
}

}  // namespace dtim
