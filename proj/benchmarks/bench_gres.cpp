#include <benchmark/benchmark.h>

#include "gres/cobar.hpp"
#include "gres/derived.hpp"
#include "gres/smith.hpp"
#include "gres/spectral.hpp"

#include <random>

using namespace gres;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-9, 9);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

/// Z^n -> Z^n -> ... with alternating multiplication by 2 and 0, split across two filtration degrees.
FilteredComplex staircase(std::size_t n) {
  const BaseRing zz = BaseRing::integers();
  const FgModule z = FgModule::free(zz, n);
  Matrix two(n, n), zero(n, n);
  for (std::size_t i = 0; i < n; ++i) two(i, i) = 2;
  std::vector<FgModule> terms{z, z, z, z};
  std::vector<ModuleMap> diffs{ModuleMap(z, z, two), ModuleMap(z, z, zero), ModuleMap(z, z, two)};
  std::vector<std::vector<int>> filtration;
  for (int k = 0; k < 4; ++k) {
    filtration.emplace_back();
    for (std::size_t i = 0; i < n; ++i) filtration.back().push_back(k + static_cast<int>(i % 2));
  }
  return {CochainComplex(zz, 0, std::move(terms), std::move(diffs)), std::move(filtration)};
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Matrix m = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

static void BM_ExtPeriodicity(benchmark::State& state) {
  const BaseRing r4 = BaseRing::integers_mod(4);
  const FgModule z2 = FgModule::cyclic(r4, 2);
  const InjectiveClass cls = InjectiveClass::cogenerators({FgModule::free(r4, 1)});
  const FunctorPtr t = hom_functor(z2);
  for (auto _ : state) benchmark::DoNotOptimize(derived_functor(cls, *t, z2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExtPeriodicity)->DenseRange(2, 8, 2);

static void BM_StepResolution(benchmark::State& state) {
  const BaseRing r6 = BaseRing::integers_mod(6);
  std::vector<Integer> orders(static_cast<std::size_t>(state.range(0)), Integer(2));
  const FgModule a(r6, orders);
  const InjectiveClass cls = InjectiveClass::cogenerators({FgModule::free(r6, 1), FgModule::cyclic(r6, 3)});
  for (auto _ : state) benchmark::DoNotOptimize(step_resolution(cls, a, 4));
}
BENCHMARK(BM_StepResolution)->RangeMultiplier(2)->Range(1, 8);

static void BM_SpectralPages(benchmark::State& state) {
  const FilteredComplex c = staircase(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ss_pages(c, 3));
}
BENCHMARK(BM_SpectralPages)->RangeMultiplier(2)->Range(1, 8);

static void BM_ExteriorCotor(benchmark::State& state) {
  const Coalgebra l = Coalgebra::exterior(BaseRing::prime_field(2));
  const Comodule a = Comodule::at_group_like(l, Side::right, 0), b = Comodule::at_group_like(l, Side::left, 0);
  for (auto _ : state) benchmark::DoNotOptimize(cotor(l, a, b, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExteriorCotor)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
