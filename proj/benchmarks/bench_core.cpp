#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bimeasure/bimeasure.hpp"

using namespace bimeasure;

namespace {

TMeasure random_t(std::mt19937_64& rng, const FiniteSpace& s) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Bicomplex> m(s.size());
  for (auto& z : m) z = {{double(d(rng)), double(d(rng))}, {double(d(rng)), double(d(rng))}};
  return TMeasure(s, m);
}

DMeasure random_d(std::mt19937_64& rng, const FiniteSpace& s) {
  std::uniform_int_distribution<int> d(0, 3);
  std::vector<Hyperbolic> m(s.size());
  for (auto& h : m) h = {double(d(rng)), double(d(rng))};
  return DMeasure(s, m);
}

PointMap random_map(std::mt19937_64& rng, const FiniteSpace& s) {
  std::uniform_int_distribution<std::size_t> d(0, s.size() - 1);
  std::vector<std::size_t> image(s.size());
  for (auto& y : image) y = d(rng);
  return PointMap(s, image);
}

void BM_BicomplexProduct(benchmark::State& state) {
  Bicomplex a{{1.5, -2}, {0.25, 3}}, b{{0.5, 1}, {-1, 0.75}};
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
    a = Bicomplex{{1.5, -2}, {0.25, 3}};
  }
}
BENCHMARK(BM_BicomplexProduct);

void BM_TotalVariation(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const FiniteSpace s = FiniteSpace::indexed(static_cast<std::size_t>(state.range(0)));
  const TMeasure mu = random_t(rng, s);
  const SetMask all = SetMask::full(s.size());
  for (auto _ : state) benchmark::DoNotOptimize(total_variation(mu, all));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TotalVariation)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity(benchmark::oN);

void BM_TotalVariationBruteforce(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const FiniteSpace s = FiniteSpace::indexed(static_cast<std::size_t>(state.range(0)));
  const TMeasure mu = random_t(rng, s);
  const SetMask all = SetMask::full(s.size());
  for (auto _ : state) benchmark::DoNotOptimize(total_variation_bruteforce(mu, all));
}
BENCHMARK(BM_TotalVariationBruteforce)->DenseRange(2, 8, 2);

void BM_Integrate(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const FiniteSpace s = FiniteSpace::indexed(static_cast<std::size_t>(state.range(0)));
  const TMeasure t = random_t(rng, s);
  const TFunction f(s, std::vector<Bicomplex>(t.masses().begin(), t.masses().end()));
  const DMeasure mu = random_d(rng, s);
  for (auto _ : state) benchmark::DoNotOptimize(integrate(f, mu));
}
BENCHMARK(BM_Integrate)->RangeMultiplier(8)->Range(8, 1 << 15);

void BM_LebesgueRadonNikodym(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const FiniteSpace s = FiniteSpace::indexed(static_cast<std::size_t>(state.range(0)));
  const TMeasure lambda = random_t(rng, s);
  const DMeasure mu = random_d(rng, s);
  for (auto _ : state) benchmark::DoNotOptimize(lebesgue_radon_nikodym(lambda, mu));
}
BENCHMARK(BM_LebesgueRadonNikodym)->RangeMultiplier(8)->Range(8, 1 << 12);

void BM_EpsilonDelta(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const FiniteSpace s = FiniteSpace::indexed(static_cast<std::size_t>(state.range(0)));
  const DMeasure mu = random_d(rng, s);
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_delta_witness(mu, mu, Hyperbolic{2, 2}));
}
BENCHMARK(BM_EpsilonDelta)->DenseRange(4, 16, 4);

void BM_CesaroInvariant(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const FiniteSpace s = FiniteSpace::indexed(static_cast<std::size_t>(state.range(0)));
  const PointMap f = random_map(rng, s);
  const DProbability mu = DProbability::uniform(s);
  for (auto _ : state) benchmark::DoNotOptimize(cesaro_invariant(f, mu, 64, 1e-9));
}
BENCHMARK(BM_CesaroInvariant)->RangeMultiplier(10)->Range(10, 10000);

void BM_InvariantBasis(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const FiniteSpace s = FiniteSpace::indexed(static_cast<std::size_t>(state.range(0)));
  const PointMap f = random_map(rng, s);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_basis_bruteforce(f));
}
BENCHMARK(BM_InvariantBasis)->RangeMultiplier(10)->Range(10, 10000);

}  // namespace
BENCHMARK_MAIN();
