#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "irrcert/criteria.hpp"
#include "irrcert/families.hpp"
#include "irrcert/oracle.hpp"
#include "irrcert/root_bounds.hpp"

using namespace irrcert;

namespace {

Polynomial random_poly(std::mt19937_64& eng, std::size_t deg, long cmax) {
  std::uniform_int_distribution<long> dist(-cmax, cmax);
  std::vector<Int> c(deg + 1);
  for (std::size_t i = 0; i < deg; ++i) c[i] = dist(eng);
  do {
    c[deg] = dist(eng);
  } while (c[deg] == 0);
  return Polynomial{std::move(c)};
}

void BM_PolyMul(benchmark::State& state) {
  std::mt19937_64 eng(1);
  auto deg = static_cast<std::size_t>(state.range(0));
  Polynomial f = random_poly(eng, deg, 1000000);
  Polynomial g = random_poly(eng, deg, 1000000);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32)->Arg(128);

void BM_SchurCohn(benchmark::State& state) {
  std::mt19937_64 eng(2);
  auto deg = static_cast<std::size_t>(state.range(0));
  Polynomial f = random_poly(eng, deg, 1000);
  for (auto _ : state)
    benchmark::DoNotOptimize(root_bounds::schur_cohn_outside(f, 2));
}
BENCHMARK(BM_SchurCohn)->Arg(4)->Arg(8)->Arg(12);

void BM_Kronecker(benchmark::State& state) {
  std::mt19937_64 eng(3);
  auto deg = static_cast<std::size_t>(state.range(0));
  Polynomial f = random_poly(eng, deg, 20);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::kronecker_factor(f));
}
BENCHMARK(BM_Kronecker)->Arg(2)->Arg(3)->Arg(4);

void BM_AutoSearch(benchmark::State& state) {
  std::mt19937_64 eng(4);
  auto deg = static_cast<std::size_t>(state.range(0));
  Polynomial f = random_poly(eng, deg, 50);
  criteria::SearchOptions options;
  options.use_oracle = false;
  for (auto _ : state) benchmark::DoNotOptimize(criteria::auto_search(f, options));
}
BENCHMARK(BM_AutoSearch)->Arg(4)->Arg(8)->Arg(12);

void BM_FamilyXSelftest(benchmark::State& state) {
  families::FamilyParams params{families::Family::X, 5, 2,
                                1, static_cast<unsigned>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(families::family_selftest(params));
}
BENCHMARK(BM_FamilyXSelftest)->Arg(6)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
