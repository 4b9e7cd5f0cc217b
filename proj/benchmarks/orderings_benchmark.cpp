#include <benchmark/benchmark.h>

#include <cstddef>

#include "lexsearch/graph.hpp"
#include "lexsearch/search.hpp"

namespace {

using lexsearch::Engine;
using lexsearch::SearchKind;

// Random connected graph with m close to 4n.
lexsearch::Graph random_graph(std::size_t n) {
  const double p = n > 1 ? 6.0 / static_cast<double>(n - 1) : 0.0;
  return lexsearch::generate(lexsearch::family::RandomConnected{n, p, 42});
}

template <SearchKind kind, Engine engine>
void BM_Search(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto result = lexsearch::run_search(g, kind, engine);
    benchmark::DoNotOptimize(result.order.data());
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(g.vertex_count() + g.edge_count()));
  state.counters["m"] = static_cast<double>(g.edge_count());
}

BENCHMARK(BM_Search<SearchKind::LexBFS, Engine::Fast>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN);
BENCHMARK(BM_Search<SearchKind::LexUP, Engine::Fast>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oN);
BENCHMARK(BM_Search<SearchKind::LexDFS, Engine::Fast>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_Search<SearchKind::LexDOWN, Engine::Fast>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_Search<SearchKind::LexBFS, Engine::Reference>)->RangeMultiplier(2)->Range(1 << 8, 1 << 11);
BENCHMARK(BM_Search<SearchKind::LexDFS, Engine::Reference>)->RangeMultiplier(2)->Range(1 << 8, 1 << 11);

void BM_Verify(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)));
  const auto order = lexsearch::fast_lexbfs(g).order;
  for (auto _ : state) {
    auto verdict = lexsearch::verify_ordering(g, SearchKind::LexBFS, order);
    benchmark::DoNotOptimize(verdict.status);
  }
}
BENCHMARK(BM_Verify)->RangeMultiplier(2)->Range(1 << 8, 1 << 11);

}  // namespace

BENCHMARK_MAIN();
