#include <benchmark/benchmark.h>

#include <random>

#include "qlat/families.hpp"
#include "qlat/search.hpp"

using namespace qlat;

static void BM_gaussian_binomial(benchmark::State& state) {
  long long n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(gaussian_binomial(n, n / 2, 2));
}
BENCHMARK(BM_gaussian_binomial)->Arg(10)->Arg(50)->Arg(200);

static void BM_rref(benchmark::State& state) {
  const Field& f = Field::get(2);
  unsigned n = (unsigned)state.range(0);
  std::mt19937_64 rng(1);
  Matrix m(n / 2, n);
  for (auto& v : m.a) v = uint8_t(rng() & 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(f, m));
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_enumerate_layer(benchmark::State& state) {
  const Field& f = Field::get(2);
  unsigned n = (unsigned)state.range(0);
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_subspace(f, n, n / 2, [&](const Subspace&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_enumerate_layer)->Arg(4)->Arg(6);

static void BM_span_pair(benchmark::State& state) {
  const Field& f = Field::get(2);
  auto planes = all_subspaces(f, 5, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(span(planes[i % planes.size()],
                                  planes[(i * 7 + 3) % planes.size()]));
    ++i;
  }
}
BENCHMARK(BM_span_pair);

static void BM_intersect_pair(benchmark::State& state) {
  const Field& f = Field::get(2);
  auto planes = all_subspaces(f, 5, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect(planes[i % planes.size()],
                                       planes[(i * 7 + 3) % planes.size()]));
    ++i;
  }
}
BENCHMARK(BM_intersect_pair);

static void BM_max_union_search(benchmark::State& state) {
  const Field& f = Field::get(2);
  unsigned s = (unsigned)state.range(0);
  for (auto _ : state) {
    auto cert = search::max_s_union(f, 4, s);
    benchmark::DoNotOptimize(cert.maximum);
  }
}
BENCHMARK(BM_max_union_search)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_build_family(benchmark::State& state) {
  const Field& f = Field::get(2);
  for (auto _ : state) benchmark::DoNotOptimize(build_T(f, 6, 3).size());
}
BENCHMARK(BM_build_family)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
