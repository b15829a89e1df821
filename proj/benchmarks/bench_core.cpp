#include "s4e/nilpotent.hpp"
#include "s4e/obstructions.hpp"
#include "s4e/pairing.hpp"
#include "s4e/realization.hpp"
#include "s4e/seifert_pairing.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace s4e;

namespace {

IntMatrix random_matrix(std::size_t n, std::mt19937 &rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

// k copies of lw(1/p) + lw(-1/p)
LinkingPairing doubled(int p, int k) {
  LinkingPairing l;
  for (int i = 0; i < k; ++i)
    l = orthogonal_sum(l, orthogonal_sum(pairing_lw(make_rat(1, p)), pairing_lw(make_rat(-1, p))));
  return l;
}

} // namespace

static void BM_SmithNormalForm(benchmark::State &state) {
  std::mt19937 rng(7);
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_IsHyperbolic(benchmark::State &state) {
  auto l = orthogonal_sum(doubled(3, static_cast<int>(state.range(0))), doubled(5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(is_hyperbolic(l));
}
BENCHMARK(BM_IsHyperbolic)->Arg(1)->Arg(4)->Arg(8);

static void BM_TorsionPairing(benchmark::State &state) {
  std::vector<std::pair<long, long>> pairs;
  for (long i = 0; i < state.range(0); ++i) {
    long a = 3 + 2 * i;
    pairs.push_back({a, 1});
    pairs.push_back({a, -1});
  }
  auto s = make_seifert(0, pairs);
  for (auto _ : state) benchmark::DoNotOptimize(torsion_pairing(s));
}
BENCHMARK(BM_TorsionPairing)->Arg(1)->Arg(3)->Arg(6);

static void BM_Verdict(benchmark::State &state) {
  ManifoldDescription m = make_seifert(0, {{3, 1}, {3, -1}, {5, 2}, {5, -2}, {7, 1}, {7, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(verdict(m));
}
BENCHMARK(BM_Verdict);

static void BM_RealizeGeneral(benchmark::State &state) {
  auto l = orthogonal_sum(doubled(3, static_cast<int>(state.range(0))), doubled(4, 1));
  for (auto _ : state) benchmark::DoNotOptimize(realize_general(l));
}
BENCHMARK(BM_RealizeGeneral)->Arg(1)->Arg(2)->Arg(4);

static void BM_WangBetti(benchmark::State &state) {
  auto g = cyclic_semidirect(Int(state.range(0)), Int(1 + state.range(0) / 3));
  Field f{3};
  for (auto _ : state) benchmark::DoNotOptimize(wang_betti(g, f));
}
BENCHMARK(BM_WangBetti)->Arg(9)->Arg(27)->Arg(81);
BENCHMARK_MAIN();
