#include <doctest.h>

#include <set>
#include <unordered_set>

#include "dtim/synth.hpp"
#include "dtim/text.hpp"

using namespace dtim;

TEST_SUITE("synth") {

TEST_CASE("the same seed reproduces the same data") {
  SynthConfig cfg;
  cfg.native_count = 50;
  cfg.translit_count = 50;
  cfg.seed = 9;
  const SynthData a = generate_synthetic(cfg);
  const SynthData b = generate_synthetic(cfg);
  REQUIRE(a.words == b.words);
  REQUIRE(a.labels == b.labels);
}

TEST_CASE("different seeds differ") {
  SynthConfig cfg;
  cfg.native_count = 50;
  cfg.translit_count = 50;
  SynthConfig other = cfg;
  other.seed = cfg.seed + 1;
  CHECK(generate_synthetic(cfg).words != generate_synthetic(other).words);
}

TEST_CASE("counts, labels, and uniqueness") {
  SynthConfig cfg;
  cfg.native_count = 120;
  cfg.translit_count = 80;
  const SynthData data = generate_synthetic(cfg);
  REQUIRE(data.words.size() == 200);
  REQUIRE(data.labels.size() == 200);
  std::unordered_set<std::string> seen(data.words.begin(), data.words.end());
  CHECK(seen.size() == 200);
  std::size_t native = 0;
  for (const auto& [w, label] : data.labels) native += label == Label::Native;
  CHECK(native == 120);
}

TEST_CASE("zero overlap keeps the class alphabets disjoint") {
  SynthConfig cfg;
  cfg.native_count = 60;
  cfg.translit_count = 60;
  cfg.overlap = 0.0;
  const SynthData data = generate_synthetic(cfg);
  std::set<std::string> native_chars;
  std::set<std::string> translit_chars;
  for (std::size_t i = 0; i < data.words.size(); ++i) {
    auto& target = data.labels[i].second == Label::Native ? native_chars
                                                          : translit_chars;
    for (auto piece : segment(data.words[i])) target.emplace(piece);
  }
  for (const auto& c : native_chars) REQUIRE(translit_chars.count(c) == 0);
}

TEST_CASE("full overlap with equal sizes uses one alphabet") {
  SynthConfig cfg;
  cfg.native_alphabet = 12;
  cfg.translit_alphabet = 12;
  cfg.native_count = 60;
  cfg.translit_count = 60;
  cfg.overlap = 1.0;
  const SynthData data = generate_synthetic(cfg);
  std::set<std::string> chars;
  for (const auto& w : data.words) {
    for (auto piece : segment(w)) chars.emplace(piece);
  }
  CHECK(chars.size() <= 12);
}

TEST_CASE("length bounds are respected") {
  SynthConfig cfg;
  cfg.min_length = 2;
  cfg.max_length = 4;
  cfg.native_count = 40;
  cfg.translit_count = 40;
  const SynthData data = generate_synthetic(cfg);
  for (const auto& w : data.words) {
    const auto len = segment(w).size();
    REQUIRE(len >= 2);
    REQUIRE(len <= 4);
  }
}

TEST_CASE("degenerate parameters are rejected") {
  SynthConfig cfg;
  cfg.native_alphabet = 0;
  CHECK_THROWS_AS(generate_synthetic(cfg), DataError);
  cfg = {};
  cfg.min_length = 0;
  CHECK_THROWS_AS(generate_synthetic(cfg), DataError);
  cfg = {};
  cfg.overlap = 1.5;
  CHECK_THROWS_AS(generate_synthetic(cfg), DataError);
  cfg = {};
  cfg.native_count = 0;
  CHECK_THROWS_AS(generate_synthetic(cfg), DataError);
  // word space too small for the requested count
  cfg = {};
  cfg.native_alphabet = 1;
  cfg.translit_alphabet = 1;
  cfg.min_length = 1;
  cfg.max_length = 1;
  cfg.native_count = 2;
  CHECK_THROWS_AS(generate_synthetic(cfg), DataError);
}

}  // TEST_SUITE
