#include <benchmark/benchmark.h>

#include "rstirling/demazure.hpp"
#include "rstirling/enumeration.hpp"
#include "rstirling/groebner.hpp"
#include "rstirling/schubert.hpp"
#include "rstirling/stirling_ideal.hpp"

using namespace rstirling;
using rstirling::combinatorics::Word;
using rstirling::groebner::buchberger;
using rstirling::groebner::GroebnerQuotient;
using rstirling::polyalg::Polynomial;
using rstirling::rings::build_ideal;

namespace {

void BM_Buchberger(benchmark::State& state) {
  const Parameters p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                     static_cast<int>(state.range(2)));
  const auto ideal = build_ideal(p).to_ideal();
  for (auto _ : state) {
    const auto q = buchberger(ideal);
    benchmark::DoNotOptimize(q.reduced_basis().size());
  }
}
BENCHMARK(BM_Buchberger)->Args({5, 3, 1})->Args({6, 4, 2})->Args({6, 5, 0})->Args({6, 6, 6});

void BM_NormalFormWordSchuberts(benchmark::State& state) {
  // Steady-state throughput of the cached reducer over a full word family.
  const Parameters p(5, 3, 2);
  const auto q = buchberger(build_ideal(p).to_ideal());
  std::vector<Polynomial> polys;
  combinatorics::for_each_word(p, [&](const Word& w) {
    polys.push_back(polyalg::word_schubert(w, p));
  });
  for (auto _ : state) {
    for (const auto& f : polys) benchmark::DoNotOptimize(q.normal_form(f));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(polys.size()));
}
BENCHMARK(BM_NormalFormWordSchuberts);

void BM_WordSchubertCold(benchmark::State& state) {
  const Parameters p(6, 4, 2);
  std::vector<Word> words;
  combinatorics::for_each_word(p, [&](const Word& w) { words.push_back(w); });
  for (auto _ : state) {
    polyalg::clear_schubert_cache();
    for (const auto& w : words) benchmark::DoNotOptimize(polyalg::word_schubert(w, p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_WordSchubertCold);

void BM_DemazureKeyPolynomials(benchmark::State& state) {
  // Key polynomials of every reverse skip composition at (6,3).
  std::vector<std::vector<int>> gammas;
  std::vector<int> subset;
  auto rec = [&](auto&& self, int start) -> void {
    if (subset.size() == 4) {
      gammas.push_back(combinatorics::reverse_skip(subset, 6));
      return;
    }
    for (int v = start; v <= 6; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  rec(rec, 1);
  for (auto _ : state) {
    for (const auto& gamma : gammas) benchmark::DoNotOptimize(polyalg::demazure(gamma));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gammas.size()));
}
BENCHMARK(BM_DemazureKeyPolynomials);

}  // namespace
