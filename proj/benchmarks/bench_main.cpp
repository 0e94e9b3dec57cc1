#include <benchmark/benchmark.h>

#include <random>

#include "loccert/certifier.hpp"
#include "loccert/error_bound.hpp"
#include "loccert/families.hpp"
#include "loccert/upb.hpp"

using namespace loccert;

namespace {

void BM_NumericalRankRandomDyads(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<ComplexMatrix> ms;
  for (Eigen::Index k = 0; k < d * d; ++k) {
    Ket a(d), b(d);
    for (Eigen::Index i = 0; i < d; ++i) a(i) = Complex(g(rng), g(rng)), b(i) = Complex(g(rng), g(rng));
    ms.push_back(a * b.adjoint());
  }
  for (auto _ : state) benchmark::DoNotOptimize(numerical_rank(std::span<const ComplexMatrix>(ms)));
}
BENCHMARK(BM_NumericalRankRandomDyads)->Arg(3)->Arg(6)->Arg(9);

void BM_CertifyTiles(benchmark::State& state) {
  const auto s = families::tiles();
  for (auto _ : state) benchmark::DoNotOptimize(certify(s));
}
BENCHMARK(BM_CertifyTiles);

void BM_CertifyGenTiles1(benchmark::State& state) {
  const auto s = families::gentiles1(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify(s));
}
BENCHMARK(BM_CertifyGenTiles1)->Arg(4)->Arg(8);

void BM_StrongNlweHalderFull(benchmark::State& state) {
  const auto s = families::halder(families::HalderVariant::full);
  for (auto _ : state) benchmark::DoNotOptimize(strong_nlwe(s));
}
BENCHMARK(BM_StrongNlweHalderFull)->Unit(benchmark::kMillisecond);

void BM_UpbTiles(benchmark::State& state) {
  const auto s = families::tiles();
  for (auto _ : state) benchmark::DoNotOptimize(analyze_upb(s));
}
BENCHMARK(BM_UpbTiles);

void BM_DeltaObjectiveGradient(benchmark::State& state) {
  const auto s = families::tiles();
  const DeltaObjective obj(s);
  std::vector<double> x(obj.num_parameters(), 0.3), g(obj.num_parameters());
  for (auto _ : state) benchmark::DoNotOptimize(obj.penalized(x, 0.5, 100.0, g));
}
BENCHMARK(BM_DeltaObjectiveGradient);

void BM_DeltaRBell(benchmark::State& state) {
  const auto s = families::bell_states();
  for (auto _ : state) benchmark::DoNotOptimize(delta_R(s, 0.5, {}));
}
BENCHMARK(BM_DeltaRBell)->Unit(benchmark::kMillisecond);

void BM_LowerBoundBell(benchmark::State& state) {
  const auto s = families::bell_states();
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound(s));
}
BENCHMARK(BM_LowerBoundBell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
