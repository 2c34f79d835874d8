#include <benchmark/benchmark.h>

#include "rstirling/coinversion.hpp"
#include "rstirling/enumeration.hpp"

using namespace rstirling;
using namespace rstirling::combinatorics;

namespace {

void BM_EnumerateCodes(benchmark::State& state) {
  const Parameters p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                     static_cast<int>(state.range(2)));
  std::int64_t count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_code(p, [&](std::span<const int>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_EnumerateCodes)->Args({8, 4, 2})->Args({8, 6, 0})->Args({8, 8, 8});

void BM_CodeRoundTrip(benchmark::State& state) {
  const Parameters p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                     static_cast<int>(state.range(2)));
  std::int64_t count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_code(p, [&](std::span<const int> code) {
      const auto sigma = partition_from_code(code, p);
      benchmark::DoNotOptimize(coinversion_code(sigma));
      ++count;
    });
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_CodeRoundTrip)->Args({7, 4, 2})->Args({8, 5, 3});

void BM_EnumerateWords(benchmark::State& state) {
  const Parameters p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                     static_cast<int>(state.range(2)));
  std::int64_t count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_word(p, [&](const Word&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_EnumerateWords)->Args({8, 5, 0})->Args({8, 4, 4});

void BM_ValidityScan(benchmark::State& state) {
  // Dominance scan over a dense batch of candidate vectors.
  const Parameters p(8, 4, 2);
  std::vector<std::vector<int>> candidates;
  std::vector<int> c(8, 0);
  for (int i = 0; i < 4096; ++i) {
    for (int j = 0; j < 8; ++j) c[static_cast<size_t>(j)] = (i * 31 + j * 17) % 4;
    candidates.push_back(c);
  }
  for (auto _ : state) {
    int valid = 0;
    for (const auto& cand : candidates)
      if (is_valid_code(cand, p)) ++valid;
    benchmark::DoNotOptimize(valid);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(candidates.size()));
}
BENCHMARK(BM_ValidityScan);

}  // namespace
