#include <benchmark/benchmark.h>

#include <random>

#include "artin/complex.hpp"
#include "artin/coxeter.hpp"
#include "artin/homalg.hpp"
#include "artin/series_window.hpp"
#include "artin/smith.hpp"

using namespace artin;

namespace {

const char* const kTypes[] = {"A3", "B3", "H3", "B4", "F4", "D5"};

PolyMatrix random_matrix(std::size_t n, int span, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-4, 4);
  PolyMatrix m(n, n, Domain::rationals());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long> cs(static_cast<std::size_t>(span + 1));
      for (auto& c : cs) c = coeff(rng);
      m(i, j) = LaurentPoly::from_ints(Domain::rationals(), 0, cs);
    }
  }
  return m;
}

void BM_Smith(benchmark::State& state) {
  const PolyMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 3, 17);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_Smith)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_SalvettiBuild(benchmark::State& state) {
  const CoxeterSystem s = parse_coxeter_system(kTypes[state.range(0)]);
  state.SetLabel(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_salvetti_complex(s));
}
BENCHMARK(BM_SalvettiBuild)->DenseRange(0, 5);

void BM_Cohomology(benchmark::State& state) {
  const CochainComplex c = build_salvetti_complex(parse_coxeter_system(kTypes[state.range(0)]));
  state.SetLabel(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(c));
}
BENCHMARK(BM_Cohomology)->DenseRange(0, 5);

void BM_WindowDimension(benchmark::State& state) {
  const CochainComplex c = build_salvetti_complex(parse_coxeter_system("B3"));
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(m_cohomology_dim_at(c, 2, radius));
}
BENCHMARK(BM_WindowDimension)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
