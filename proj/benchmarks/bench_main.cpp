#include <benchmark/benchmark.h>

#include "genform/connection.hpp"
#include "genform/gen_form.hpp"
#include "genform/gen_vector.hpp"
#include "genform/hamiltonian.hpp"
#include "genform/harness/random.hpp"
#include "genform/harness/suites.hpp"

namespace {

using namespace genform;
using harness::RandomSource;

constexpr std::uint64_t kSeed = 99;

void BM_PolynomialProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rng = RandomSource::for_trial(kSeed, 0);
  const Polynomial a = rng.polynomial(n, 4), b = rng.polynomial(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialProduct)->DenseRange(2, 4);

void BM_GenFormWedge(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rng = RandomSource::for_trial(kSeed, 1);
  const GenForm a = rng.gen_form(n, 1, Rational(1, 2)), b = rng.gen_form(n, 1, Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_GenFormWedge)->DenseRange(2, 4);

void BM_GenFormExteriorDerivative(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rng = RandomSource::for_trial(kSeed, 2);
  const GenForm a = rng.gen_form(n, 1, Rational(2), 3);
  for (auto _ : state) benchmark::DoNotOptimize(exterior_derivative(a));
}
BENCHMARK(BM_GenFormExteriorDerivative)->DenseRange(2, 4);

void BM_GenVectorBracket(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rng = RandomSource::for_trial(kSeed, 3);
  const GenVectorField V = rng.gen_vector_field(n, Rational(1)), W = rng.gen_vector_field(n, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(bracket(V, W));
}
BENCHMARK(BM_GenVectorBracket)->DenseRange(2, 4);

void BM_Curvature(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rng = RandomSource::for_trial(kSeed, 4);
  const GenConnection A = rng.connection(n, Rational(-1));
  for (auto _ : state) benchmark::DoNotOptimize(curvature(A));
}
BENCHMARK(BM_Curvature)->DenseRange(2, 4);

void BM_OscillatorIntegration(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_hamilton(Rational(1), Rational(1, 2), 1, {1.0}, {0.0}, 5.0, 1e-3));
  }
}
BENCHMARK(BM_OscillatorIntegration)->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
  harness::SuiteOptions o;
  o.dim = static_cast<std::size_t>(state.range(0));
  o.trials = 10;
  o.seed = kSeed;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_all_suites(o));
}
BENCHMARK(BM_IdentitySuite)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
