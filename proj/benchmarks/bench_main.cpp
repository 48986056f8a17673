#include <benchmark/benchmark.h>

#include <random>

#include "conjlang/automata.hpp"
#include "conjlang/benois.hpp"
#include "conjlang/conj_langs.hpp"
#include "conjlang/gcp.hpp"
#include "conjlang/growth.hpp"
#include "conjlang/regex.hpp"
#include "conjlang/virtually_abelian.hpp"

using namespace conjlang;

namespace {

const Alphabet kAb(2);

// Same shape as the test generator: sparse random Nfa with `n` states.
Nfa random_nfa(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Nfa a(kAb, static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q)
      for (Letter x = 0; x < kAb.size(); ++x)
        if (coin(rng) < 0.4 / n) a.add_transition(static_cast<State>(p), x, static_cast<State>(q));
    if (coin(rng) < 0.4) a.set_final(static_cast<State>(p));
  }
  a.set_initial(0);
  a.set_final(static_cast<State>(n - 1));
  return a;
}

void BM_DeterminizeMinimize(benchmark::State& state) {
  std::mt19937 rng(1);
  const Nfa a = random_nfa(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinize_minimize(a));
}
BENCHMARK(BM_DeterminizeMinimize)->Arg(4)->Arg(8)->Arg(12);

void BM_Benois(benchmark::State& state) {
  std::mt19937 rng(2);
  const Nfa a = random_nfa(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(benois_reduce(a));
}
BENCHMARK(BM_Benois)->Arg(4)->Arg(8)->Arg(16);

void BM_ConjGeoGeneral(benchmark::State& state) {
  const RationalSubset u = RationalSubset::from_regex("(ab|aB)*a(bA)*", kAb);
  const RationalSubset v = RationalSubset::from_regex("(a|b)*B", kAb);
  for (auto _ : state) benchmark::DoNotOptimize(conjgeo_general(u, v));
}
BENCHMARK(BM_ConjGeoGeneral);

void BM_ConjGeoUnconstrained(benchmark::State& state) {
  const RationalSubset u = RationalSubset::from_regex("(ab|aB)*a(bA)*", kAb);
  for (auto _ : state) benchmark::DoNotOptimize(conjgeo_unconstrained(u));
}
BENCHMARK(BM_ConjGeoUnconstrained);

void BM_RelativeGrowthUd(benchmark::State& state) {
  const RationalSubset u(build_ud(static_cast<int>(state.range(0))).k_d);
  for (auto _ : state) benchmark::DoNotOptimize(relative_growth(u, 24));
}
BENCHMARK(BM_RelativeGrowthUd)->Arg(1)->Arg(2)->Arg(3);

void BM_RelativeGrowthFree(benchmark::State& state) {
  const RationalSubset all = RationalSubset::whole_group(kAb);
  for (auto _ : state) benchmark::DoNotOptimize(relative_growth(all, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_RelativeGrowthFree)->Arg(6)->Arg(9);

void BM_DecideGcp(benchmark::State& state) {
  const GcpInstance inst{parse_word("AbabaBa", kAb), RationalSubset::from_regex("(ab)*b*", kAb),
                         RationalSubset::from_regex("a*B?", kAb)};
  for (auto _ : state) benchmark::DoNotOptimize(decide_gcp(inst));
}
BENCHMARK(BM_DecideGcp);

void BM_AlphaVa(benchmark::State& state) {
  const VAPresentation g = parse_presentation(
      R"({"m":2,"cosets":2,"Q":[[[1,0],[0,1]],[[0,1],[1,0]]],"coset_product":[[0,1],[1,0]],)"
      R"("cocycle":[[[0,0],[0,0]],[[0,0],[0,0]]]})");
  const VASubset u{{VAComponent{SemilinearSet{2, {LinearSet{{1, 2}, {{1, 0}}}}}, 1}}};
  for (auto _ : state) benchmark::DoNotOptimize(va_box(g, alpha_va(g, u), 6));
}
BENCHMARK(BM_AlphaVa);

}  // namespace

BENCHMARK_MAIN();
