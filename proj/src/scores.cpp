#include "dtim/scores.hpp"

namespace dtim {

std::vector<ScorePair> make_pairs(std::span<const double> scores) {
  std::vector<ScorePair> out;
  out.reserve(scores.size());
  for (double s : scores) out.push_back({s, 1.0 - s});
  return out;
}

std::vector<double> nativeness(std::span<const ScorePair> pairs) {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const ScorePair& p : pairs) out.push_back(p.nat);
  return out;
}

std::vector<ScorePair> mirrored(std::span<const ScorePair> pairs) {
  std::vector<ScorePair> out;
  out.reserve(pairs.size());
  for (const ScorePair& p : pairs) out.push_back({p.tra, p.nat});
  return out;
}

}  // namespace dtim
