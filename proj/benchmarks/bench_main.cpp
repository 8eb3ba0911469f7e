#include <benchmark/benchmark.h>

#include "rankstab/rankstab.hpp"
#include "support/generators.hpp"

namespace {

using namespace rankstab;

// Full 2-skeleton on `vertices` vertices with random monotone grades.
MultiFilteredComplex bench_complex(int vertices, std::uint64_t seed) {
  testing::Rng rng(seed);
  std::vector<Simplex> out;
  auto grade = [&](std::initializer_list<std::size_t> faces) {
    Grade g{rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0)};
    for (std::size_t f : faces) g = join(g, out[f].grade);
    return g;
  };
  std::vector<std::vector<std::size_t>> edge(vertices, std::vector<std::size_t>(vertices));
  for (int a = 0; a < vertices; ++a) out.push_back({{VertexId(a)}, grade({})});
  for (int a = 0; a < vertices; ++a)
    for (int b = a + 1; b < vertices; ++b) {
      edge[a][b] = out.size();
      out.push_back({{VertexId(a), VertexId(b)}, grade({std::size_t(a), std::size_t(b)})});
    }
  for (int a = 0; a < vertices; ++a)
    for (int b = a + 1; b < vertices; ++b)
      for (int c = b + 1; c < vertices; ++c)
        out.push_back({{VertexId(a), VertexId(b), VertexId(c)},
                       grade({edge[a][b], edge[a][c], edge[b][c]})});
  return MultiFilteredComplex(2, std::move(out));
}

void BM_LineBarcodes(benchmark::State& state) {
  const auto m = bench_complex(static_cast<int>(state.range(0)), 11);
  const auto line = canonicalize_line({1.0, 0.6}, {0.2, -0.1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_barcodes(restrict_to_line(m, line)));
  }
  state.SetComplexityN(static_cast<std::int64_t>(m.size()));
}
BENCHMARK(BM_LineBarcodes)->DenseRange(4, 16, 4)->Complexity();

void BM_Bottleneck(benchmark::State& state) {
  testing::Rng rng(23);
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto a = testing::random_barcode(rng, size, 1, false);
  const auto b = testing::random_barcode(rng, size, 1, false);
  for (auto _ : state) benchmark::DoNotOptimize(bottleneck_distance(a, b));
}
BENCHMARK(BM_Bottleneck)->Arg(8)->Arg(32)->Arg(128);

void BM_MatchingDistance(benchmark::State& state) {
  const auto m = bench_complex(6, 5);
  const auto n = perturb_grades(m, 0.3, 9).n;
  const auto steps = static_cast<std::size_t>(state.range(0));
  const LineGrid grid{steps, steps / 2, std::nullopt, {}};
  for (auto _ : state) benchmark::DoNotOptimize(matching_distance_lb(m, n, grid, 0).value);
}
BENCHMARK(BM_MatchingDistance)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
