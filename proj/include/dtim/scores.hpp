#pragma once

#include <span>
#include <vector>

namespace dtim {

// Nativeness/transliterableness weight pair for one word. The two components
// are carried independently rather than recomputing 1 - nat on the fly, so
// exchanging them is an exact involution and the relabeled iteration
// reproduces the original bit-for-bit. Both stay in [0,1].
struct ScorePair {
  double nat = 0.5;
  double tra = 0.5;

  friend bool operator==(const ScorePair&, const ScorePair&) = default;
};

// (w, 1-w) pairs from plain nativeness scores.
std::vector<ScorePair> make_pairs(std::span<const double> scores);

// Nativeness components.
std::vector<double> nativeness(std::span<const ScorePair> pairs);

// Component swap.
std::vector<ScorePair> mirrored(std::span<const ScorePair> pairs);

}  // namespace dtim
