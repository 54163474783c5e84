#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dtim/evaluation.hpp"

namespace dtim {

// Two-class word generator used as a ground-truth oracle. Each class samples
// characters uniformly from its own alphabet; the alphabets share a
// configurable slice. The native alphabet is small so its stems recur with
// many distinct continuations, while the larger transliterable alphabet
// yields stems that rarely repeat -- the same asymmetry the diversity
// initialization keys on.
struct SynthConfig {
  std::size_t native_alphabet = 10;
  std::size_t translit_alphabet = 40;
  std::size_t native_count = 500;
  std::size_t translit_count = 500;
  std::size_t min_length = 3;
  std::size_t max_length = 8;
  double overlap = 0.0;  // shared fraction of the smaller alphabet
  std::uint64_t seed = 1;

  void validate() const;  // throws DataError
};

struct SynthData {
  std::vector<std::string> words;  // native block then transliterable block
  std::vector<std::pair<std::string, Label>> labels;
};

// Deterministic for a given config; duplicate words are rejected and
// redrawn. Throws DataError when the parameter space cannot host the
// requested counts.
SynthData generate_synthetic(const SynthConfig& cfg);

}  // namespace dtim
