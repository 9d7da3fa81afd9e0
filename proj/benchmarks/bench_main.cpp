#include <benchmark/benchmark.h>

#include <numeric>
#include <sstream>
#include <vector>

#include "linarr/analysis.hpp"
#include "linarr/minla.hpp"
#include "linarr/treebank.hpp"

using namespace linarr;

namespace {

Tree fixed_random_tree(int n) {
  SplitMix64 rng(0xbe5e11);
  return random_labeled_tree(n, rng);
}

LinearArrangement fixed_random_arrangement(int n) {
  SplitMix64 rng(0xa11ce);
  std::vector<int> pos(static_cast<size_t>(n));
  std::iota(pos.begin(), pos.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(j)]);
  }
  return LinearArrangement::from_positions(pos);
}

void BM_CrossingNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = fixed_random_tree(n);
  const LinearArrangement arr = fixed_random_arrangement(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(crossing_number(arr, t));
  }
}
BENCHMARK(BM_CrossingNumber)->Arg(10)->Arg(20)->Arg(50)->Arg(100);

void BM_CountCrossingsPerEdge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = fixed_random_tree(n);
  const LinearArrangement arr = fixed_random_arrangement(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_crossings(arr, t).total);
  }
}
BENCHMARK(BM_CountCrossingsPerEdge)->Arg(50);

void BM_SumLengths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = fixed_random_tree(n);
  const LinearArrangement arr = fixed_random_arrangement(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_lengths(arr, t));
  }
}
BENCHMARK(BM_SumLengths)->Arg(100);

void BM_ExhaustiveEnsemble(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = fixed_random_tree(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_ensemble(t, n, 1).total);
  }
}
BENCHMARK(BM_ExhaustiveEnsemble)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MonteCarloEnsemble(benchmark::State& state) {
  const Tree t = fixed_random_tree(25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_ensemble(t, 10000, 1, 0, 1).total);
  }
}
BENCHMARK(BM_MonteCarloEnsemble)->Unit(benchmark::kMillisecond);

void BM_MinimumArrangement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = fixed_random_tree(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimum_arrangement(t, n).value);
  }
}
BENCHMARK(BM_MinimumArrangement)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_MaximumArrangement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = fixed_random_tree(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximum_arrangement(t, n).value);
  }
}
BENCHMARK(BM_MaximumArrangement)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_NoncrossingMinimum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = fixed_random_tree(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimum_noncrossing_arrangement(t, n).value);
  }
}
BENCHMARK(BM_NoncrossingMinimum)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PrueferEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    enumerate_labeled_trees(n, [&](const Tree& t) {
      benchmark::DoNotOptimize(t.k2());
      ++count;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PrueferEnumeration)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_AldousBroder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_labeled_tree(n, rng).k2());
  }
}
BENCHMARK(BM_AldousBroder)->Arg(64)->Arg(256)->Arg(1024);

void BM_AnalyzeSentence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = fixed_random_tree(n);
  AnalysisOptions options;
  options.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        analyze_sentence("bench", t, LinearArrangement::identity(n), options, 0)
            .r);
  }
}
BENCHMARK(BM_AnalyzeSentence)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ParseConllu(benchmark::State& state) {
  std::ostringstream text;
  for (int s = 0; s < 500; ++s) {
    text << "# sent_id = s" << s << "\n";
    const int len = 5 + s % 15;
    for (int i = 1; i <= len; ++i) {
      text << i << "\tw" << i << "\t_\t_\t_\t_\t" << (i == 1 ? 0 : i - 1)
           << "\tdep\t_\t_\n";
    }
    text << "\n";
  }
  const std::string corpus = text.str();
  for (auto _ : state) {
    std::istringstream in(corpus);
    benchmark::DoNotOptimize(parse_conllu(in, "bench").sentences.size());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(corpus.size()));
}
BENCHMARK(BM_ParseConllu);

}  // namespace

BENCHMARK_MAIN();
