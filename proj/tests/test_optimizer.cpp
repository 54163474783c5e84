#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "dtim/optimizer.hpp"
#include "dtim/synth.hpp"
#include "support.hpp"

using namespace dtim;

namespace {

Lexicon from_text(const std::string& text) {
  std::istringstream in(text);
  return Lexicon::from_lines(in, {2, SegmentMode::Grapheme});
}

Lexicon synth_lexicon(const SynthConfig& cfg) {
  const SynthData data = generate_synthetic(cfg);
  return Lexicon::from_words(data.words, {2, SegmentMode::Grapheme});
}

}  // namespace

TEST_SUITE("optimizer") {

TEST_CASE("objective collapses onto one model at the weight boundary") {
  const Lexicon lex = from_text("ab\n");
  const NGramVocab vocab(lex, 1);
  NGramDistribution native{{0.3, 0.7}};
  NGramDistribution translit{{0.9, 0.1}};
  const auto one = make_pairs(std::vector<double>{1.0});
  CHECK(objective_max(vocab, one, native, translit) ==
        doctest::Approx(std::log(0.3) + std::log(0.7)).epsilon(1e-15));
  CHECK(objective_min(vocab, one, native, translit) ==
        doctest::Approx(std::log(0.9) + std::log(0.1)).epsilon(1e-15));
}

TEST_CASE("worked two-word objective value") {
  const Lexicon lex = from_text("ab\ncd\n");
  const NGramVocab vocab(lex, 1);
  const auto uniform = uniform_distribution(vocab);
  const auto pairs = make_pairs(std::vector<double>{0.9, 0.1});
  // independently derived: 4 * ln(0.205)
  CHECK(objective_max(vocab, pairs, uniform, uniform) ==
        doctest::Approx(-6.338981199374915).epsilon(1e-12));
}

TEST_CASE("equal models and balanced weights equate the objectives") {
  std::mt19937_64 rng(53);
  const Lexicon lex = testsupport::random_lexicon(rng, 12, 1);
  const NGramVocab vocab(lex, 1);
  const auto d = testsupport::random_distribution(rng, vocab);
  const auto half = make_pairs(std::vector<double>(lex.size(), 0.5));
  const double omax = objective_max(vocab, half, d, d);
  CHECK(omax == objective_min(vocab, half, d, d));
  // algebraic collapse: every term is ln(0.5 * p(g))
  double expect = 0.0;
  for (std::size_t w = 0; w < lex.size(); ++w) {
    for (GramIndex g : vocab.word_grams(w)) expect += std::log(0.5 * d.probs[g]);
  }
  CHECK(omax == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("relabeling swaps the objectives bit-for-bit") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const Lexicon lex = testsupport::random_lexicon(rng, 10, 1);
    const NGramVocab vocab(lex, 1);
    const auto pairs = testsupport::random_pairs(rng, lex.size(), 0.0, 1.0);
    const auto mirror = mirrored(std::span<const ScorePair>(pairs));
    const auto native = testsupport::random_distribution(rng, vocab);
    const auto translit = testsupport::random_distribution(rng, vocab);
    // definitional identity: same models, weights exchanged
    REQUIRE(objective_min(vocab, pairs, native, translit) ==
            objective_max(vocab, mirror, native, translit));
  }
}

TEST_CASE("equal models send every eligible word to exactly one half") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const Lexicon lex = testsupport::random_lexicon(rng, 15, 2, 6, 1, 6);
    const NGramVocab vocab(lex, 2);
    const auto d = testsupport::random_distribution(rng, vocab);
    const auto prev = testsupport::random_pairs(rng, lex.size(), 0.0, 1.0);
    const auto next = update_scores(vocab, prev, d, d);
    for (std::size_t w = 0; w < lex.size(); ++w) {
      if (vocab.word_grams(w).empty()) {
        REQUIRE(next[w] == prev[w]);
      } else {
        REQUIRE(next[w].nat == 0.5);
        REQUIRE(next[w].tra == 0.5);
      }
    }
  }
}

TEST_CASE("single-character fixed point from a zero previous estimate") {
  const Lexicon lex = from_text("a\nb\n");
  const NGramVocab vocab(lex, 1);
  NGramDistribution native{{0.8, 0.2}};
  NGramDistribution translit{{0.2, 0.8}};
  const auto next = update_scores(
      vocab, std::vector<double>{0.0, 0.0}, native, translit);
  CHECK(next[0] == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("worked two-character score update") {
  const Lexicon lex = from_text("ab\ncd\nef\n");
  const NGramVocab vocab(lex, 1);
  NGramDistribution native{{0.4, 0.4, 0.05, 0.05, 0.05, 0.05}};
  NGramDistribution translit{{0.1, 0.1, 0.2, 0.2, 0.2, 0.2}};
  const auto next = update_scores(
      vocab, std::vector<double>{0.5, 0.5, 0.5}, native, translit);
  CHECK(next[0] == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("a zero score is not sticky") {
  // the refinement from w = 0 stays strictly positive, so diversity-0
  // initializations can migrate in later iterations
  std::mt19937_64 rng(139);
  for (int trial = 0; trial < 20; ++trial) {
    const Lexicon lex = testsupport::random_lexicon(rng, 15, 1);
    const NGramVocab vocab(lex, 1);
    const auto native = testsupport::random_distribution(rng, vocab);
    const auto translit = testsupport::random_distribution(rng, vocab);
    const auto zeros = make_pairs(std::vector<double>(lex.size(), 0.0));
    const auto next = update_scores(vocab, zeros, native, translit);
    for (std::size_t w = 0; w < lex.size(); ++w) {
      if (vocab.word_grams(w).empty()) continue;
      REQUIRE(next[w].nat > 0.0);
      REQUIRE(next[w].nat < 1.0);
    }
  }
}

TEST_CASE("scores stay inside the unit interval") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const Lexicon lex = testsupport::random_lexicon(rng, 20, 1);
    const NGramVocab vocab(lex, 1);
    const auto prev = testsupport::random_pairs(rng, lex.size(), 0.0, 1.0);
    const auto native = testsupport::random_distribution(rng, vocab);
    const auto translit = testsupport::random_distribution(rng, vocab);
    for (const ScorePair& s : update_scores(vocab, prev, native, translit)) {
      REQUIRE(s.nat >= 0.0);
      REQUIRE(s.nat <= 1.0);
      REQUIRE(s.tra >= 0.0);
      REQUIRE(s.tra <= 1.0);
    }
  }
}

TEST_CASE("curvature diagnostic on single-character words") {
  const Lexicon lex = from_text("a\nb\n");
  const NGramVocab vocab(lex, 1);
  SUBCASE("boundary case reduces to T(N - T)") {
    NGramDistribution native{{0.8, 0.2}};
    NGramDistribution translit{{0.1, 0.9}};
    // numerator 0.1 * (0.8 - 0.1) = 0.07 over mix^2 = 0.01
    CHECK(positivity_check(vocab, 0, 1.0, native, translit) ==
          doctest::Approx(7.0).epsilon(1e-12));
  }
  SUBCASE("agreeing models are positive at the midpoint") {
    NGramDistribution d{{0.5, 0.5}};
    CHECK(positivity_check(vocab, 0, 0.5, d, d) ==
          doctest::Approx(4.0).epsilon(1e-12));
  }
  SUBCASE("strongly disagreeing models can push it negative") {
    NGramDistribution native{{0.9, 0.1}};
    NGramDistribution translit{{0.001, 0.999}};
    CHECK(positivity_check(vocab, 0, 0.5, native, translit) < 0.0);
  }
}

TEST_CASE("analytic score gradient matches central differences") {
  std::mt19937_64 rng(71);
  int checked = 0;
  while (checked < 50) {
    const Lexicon lex = testsupport::random_lexicon(rng, 8, 1, 5, 1, 5);
    const NGramVocab vocab(lex, 1);
    auto scores = nativeness(testsupport::random_pairs(rng, lex.size()));
    const auto native = testsupport::random_distribution(rng, vocab);
    const auto translit = testsupport::random_distribution(rng, vocab);
    const std::size_t w = rng() % lex.size();
    if (vocab.word_grams(w).empty()) continue;
    const double analytic =
        score_gradient(vocab, w, scores[w], native, translit);
    if (std::abs(analytic) < 1e-2) continue;  // too close to stationarity
    const double eps = 1e-6;
    auto hi = scores;
    auto lo = scores;
    hi[w] += eps;
    lo[w] -= eps;
    const double fd =
        (objective_min(vocab, hi, native, translit) -
         objective_min(vocab, lo, native, translit)) /
        (2.0 * eps);
    REQUIRE(std::abs(analytic - fd) <=
            1e-5 * std::max(std::abs(analytic), std::abs(fd)));
    ++checked;
  }
}

TEST_CASE("the converged score update is a zero of the gradient") {
  SynthConfig synth;
  synth.native_count = 60;
  synth.translit_count = 60;
  synth.seed = 5;
  const Lexicon lex = synth_lexicon(synth);
  DtimConfig cfg;
  cfg.convergence_eps = 1e-12;
  cfg.max_iters = 3000;
  const DtimResult result = run(lex, cfg);
  REQUIRE(result.converged);
  const NGramVocab vocab(lex, cfg.n);
  for (std::size_t w = 0; w < lex.size(); ++w) {
    if (!result.scored[w]) continue;
    const double s = result.scores[w];
    const bool at_boundary = s < 1e-6 || s > 1.0 - 1e-6;
    const double grad =
        score_gradient(vocab, w, s, result.native_dist, result.translit_dist);
    REQUIRE((at_boundary || std::abs(grad) < 1e-3));
  }
}

TEST_CASE("a single-word lexicon converges without incident") {
  for (int n : {1, 2}) {
    const Lexicon lex = from_text("ab\n");
    DtimConfig cfg;
    cfg.n = n;
    cfg.max_iters = 50;
    const DtimResult result = run(lex, cfg);
    CHECK(result.converged);
    CHECK(result.scores[0] >= 0.0);
    CHECK(result.scores[0] <= 1.0);
  }
}

TEST_CASE("disjoint alphabets separate perfectly") {
  SynthConfig synth;  // defaults: disjoint, 500+500
  const Lexicon lex = synth_lexicon(synth);
  const DtimResult result = run(lex, DtimConfig{});
  double min_native = 1.0;
  double max_translit = 0.0;
  for (std::size_t i = 0; i < lex.size(); ++i) {
    if (i < synth.native_count) {
      min_native = std::min(min_native, result.scores[i]);
    } else {
      max_translit = std::max(max_translit, result.scores[i]);
    }
  }
  CHECK(min_native > max_translit);
}

TEST_CASE("boundary padding makes every word eligible at high orders") {
  SynthConfig synth;
  synth.native_count = 60;
  synth.translit_count = 60;
  synth.min_length = 1;
  synth.max_length = 6;
  synth.seed = 8;
  const Lexicon lex = synth_lexicon(synth);
  for (int n : {3, 4}) {
    DtimConfig cfg;
    cfg.n = n;
    cfg.pad_boundaries = true;
    const DtimResult result = run(lex, cfg);
    for (std::size_t w = 0; w < lex.size(); ++w) {
      REQUIRE(result.scored[w]);
      REQUIRE(result.scores[w] >= 0.0);
      REQUIRE(result.scores[w] <= 1.0);
    }
  }
}

TEST_CASE("words shorter than n keep their initial score and are flagged") {
  const Lexicon lex = from_text("a\nxy\nabc\nabd\nabe\n");
  DtimConfig cfg;
  cfg.n = 2;
  const DtimResult result = run(lex, cfg);
  CHECK_FALSE(result.scored[0]);
  CHECK(result.scores[0] == cfg.neutral_score);  // no stem either
  CHECK(result.scored[1]);  // "xy" has one bigram
  for (std::size_t i = 2; i < 5; ++i) CHECK(result.scored[i]);
}

TEST_CASE("two identical runs agree bit for bit") {
  SynthConfig synth;
  synth.native_count = 80;
  synth.translit_count = 80;
  const Lexicon lex = synth_lexicon(synth);
  DtimConfig cfg;
  const DtimResult a = run(lex, cfg);
  const DtimResult b = run(lex, cfg);
  REQUIRE(a.scores == b.scores);
  REQUIRE(a.native_dist == b.native_dist);
  REQUIRE(a.translit_dist == b.translit_dist);
  REQUIRE(a.iterations_run == b.iterations_run);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    REQUIRE(a.trace[i] == b.trace[i]);
  }
}

TEST_CASE("relabeled trajectories mirror bit for bit") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    const Lexicon lex = testsupport::random_lexicon(rng, 25, 1);
    DtimConfig cfg;
    cfg.n = 1;
    // symmetric coupling: both models update against previous estimates
    cfg.translit_against_fresh_native = false;
    const NGramVocab vocab(lex, cfg.n);
    DtimState state = initial_state(lex, vocab, cfg);
    // perturb the initial scores so the mirror is not trivially symmetric
    state.scores = testsupport::random_pairs(rng, lex.size(), 0.0, 1.0);
    DtimState mirror = mirrored(state);
    for (int iter = 0; iter < 5; ++iter) {
      dtim_step(state, vocab, cfg);
      dtim_step(mirror, vocab, cfg);
      for (std::size_t w = 0; w < lex.size(); ++w) {
        REQUIRE(mirror.scores[w].nat == state.scores[w].tra);
        REQUIRE(mirror.scores[w].tra == state.scores[w].nat);
      }
      REQUIRE(mirror.native.probs == state.translit.probs);
      REQUIRE(mirror.translit.probs == state.native.probs);
    }
  }
}

TEST_CASE("objective trace is recorded every iteration") {
  std::mt19937_64 rng(137);
  const Lexicon lex = testsupport::random_lexicon(rng, 40, 1);
  DtimConfig cfg;
  cfg.n = 1;
  cfg.max_iters = 7;
  cfg.convergence_eps = 1e-300;  // force the cap
  const DtimResult result = run(lex, cfg);
  CHECK(result.iterations_run == 7);
  CHECK_FALSE(result.converged);
  REQUIRE(result.trace.size() == 7);
  for (const IterationStats& s : result.trace) {
    CHECK(std::isfinite(s.objective_max));
    CHECK(std::isfinite(s.objective_min));
  }
}

TEST_CASE("configuration validation") {
  DtimConfig cfg;
  cfg.n = 5;
  CHECK_THROWS_AS(cfg.validate(), ModelError);
  cfg = {};
  cfg.max_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), ModelError);
  cfg = {};
  cfg.convergence_eps = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ModelError);
  cfg = {};
  cfg.stem_length = 3;  // lexicon built with 2
  const Lexicon lex = from_text("abc\n");
  CHECK_THROWS_AS(run(lex, cfg), ModelError);
}

}  // TEST_SUITE
