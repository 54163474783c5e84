// Serial reference vs OpenMP kernels on a synthetic lexicon.
//
//   ./bench/dtim_bench                # all kernels
//   OMP_NUM_THREADS=1 ./bench/dtim_bench --benchmark_filter=Parallel

#include <benchmark/benchmark.h>

#include <random>

#include "dtim/kernels.hpp"
#include "dtim/optimizer.hpp"
#include "dtim/synth.hpp"

using namespace dtim;

namespace {

struct Workload {
  Lexicon lex;
  NGramVocab vocab;
  std::vector<ScorePair> pairs;
  NGramDistribution native;
  NGramDistribution translit;
  std::vector<double> ratio;

  Workload(std::size_t words, int n)
      : lex(make_lexicon(words)), vocab(lex, n) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    pairs.reserve(lex.size());
    for (std::size_t i = 0; i < lex.size(); ++i) {
      const double w = u(rng);
      pairs.push_back({w, 1.0 - w});
    }
    native = uniform_distribution(vocab);
    translit = uniform_distribution(vocab);
    ratio.assign(vocab.size(), 1.0);
  }

  static Lexicon make_lexicon(std::size_t words) {
    SynthConfig cfg;
    cfg.native_count = words / 2;
    cfg.translit_count = words - words / 2;
    cfg.native_alphabet = 24;
    cfg.translit_alphabet = 48;
    cfg.overlap = 0.25;
    cfg.min_length = 3;
    cfg.max_length = 10;
    const SynthData data = generate_synthetic(cfg);
    return Lexicon::from_words(data.words, {2, SegmentMode::Grapheme});
  }
};

Workload& workload(int n) {
  static Workload uni(100000, 1);
  static Workload bi(100000, 2);
  return n == 1 ? uni : bi;
}

void BM_AccumulateSerial(benchmark::State& state) {
  Workload& w = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::accumulate_masses_serial(
        w.vocab, w.pairs, w.ratio, kernels::Role::Native));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(w.vocab.total_occurrences()));
}

void BM_AccumulateParallel(benchmark::State& state) {
  Workload& w = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::accumulate_masses_parallel(
        w.vocab, w.pairs, w.ratio, kernels::Role::Native));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(w.vocab.total_occurrences()));
}

void BM_ScoreUpdateSerial(benchmark::State& state) {
  Workload& w = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::update_scores_serial(w.vocab, w.pairs, w.native, w.translit));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(w.lex.size()));
}

void BM_ScoreUpdateParallel(benchmark::State& state) {
  Workload& w = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::update_scores_parallel(
        w.vocab, w.pairs, w.native, w.translit));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(w.lex.size()));
}

void BM_ObjectiveSerial(benchmark::State& state) {
  Workload& w = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::mixture_log_likelihood_serial(
        w.vocab, w.pairs, w.native.probs, w.translit.probs));
  }
}

void BM_ObjectiveParallel(benchmark::State& state) {
  Workload& w = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::mixture_log_likelihood_parallel(
        w.vocab, w.pairs, w.native.probs, w.translit.probs));
  }
}

void BM_FullIteration(benchmark::State& state) {
  Workload& w = workload(static_cast<int>(state.range(0)));
  DtimConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    DtimState s{w.pairs, w.native, w.translit};
    benchmark::DoNotOptimize(dtim_step(s, w.vocab, cfg));
  }
}

BENCHMARK(BM_AccumulateSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AccumulateParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreUpdateSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreUpdateParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ObjectiveSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ObjectiveParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullIteration)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
