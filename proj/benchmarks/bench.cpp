#include <benchmark/benchmark.h>

#include "stonedual/catalog.hpp"
#include "stonedual/duality.hpp"
#include "stonedual/unitize.hpp"

using namespace stonedual;

static void BM_SymmetricInverseMonoid(benchmark::State& state) {
  for (auto _ : state) {
    auto s = symmetric_inverse_monoid(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_SymmetricInverseMonoid)->Arg(2)->Arg(3)->Arg(4);

static void BM_KbPairGroupoid(benchmark::State& state) {
  auto g = pair_groupoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = kb(g);
    benchmark::DoNotOptimize(res.semi.size());
  }
}
BENCHMARK(BM_KbPairGroupoid)->Arg(2)->Arg(3)->Arg(4);

static void BM_StoneGroupoid(benchmark::State& state) {
  auto s = symmetric_inverse_monoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto st = stone_groupoid(s);
    benchmark::DoNotOptimize(st.groupoid.size());
  }
}
BENCHMARK(BM_StoneGroupoid)->Arg(2)->Arg(3);

static void BM_AlphaRoundTrip(benchmark::State& state) {
  auto s = symmetric_inverse_monoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto a = alpha(s);
    benchmark::DoNotOptimize(a.map.size());
  }
}
BENCHMARK(BM_AlphaRoundTrip)->Arg(2)->Arg(3);

static void BM_UnitizeFinite(benchmark::State& state) {
  auto s = symmetric_inverse_monoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto u = unitize_finite(s);
    benchmark::DoNotOptimize(u.embedding.size());
  }
}
BENCHMARK(BM_UnitizeFinite)->Arg(2)->Arg(3);

static void BM_ComposeUnitized(benchmark::State& state) {
  std::mt19937_64 rng(0xBE7C);
  auto x = random_unitized_elem(rng, 12);
  auto y = random_unitized_elem(rng, 12);
  for (auto _ : state) {
    auto xy = compose_unitized(x, y);
    benchmark::DoNotOptimize(xy.is_inner());
  }
}
BENCHMARK(BM_ComposeUnitized);

BENCHMARK_MAIN();
