#include <benchmark/benchmark.h>

#include "igs/igs.hpp"

using namespace igs;

namespace {

SystemSpec workhorse(int n) { return SystemSpec::resonant(MediumSpec(n, 0.1), 2e-3, 2); }

void BM_EigSym(benchmark::State& state) {
  const auto h = full_hamiltonian(workhorse(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym(h));
}
BENCHMARK(BM_EigSym)->Arg(99)->Arg(499)->Unit(benchmark::kMillisecond);

void BM_EigenvaluesOnly(benchmark::State& state) {
  const auto h = full_hamiltonian(workhorse(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_sym(h));
}
BENCHMARK(BM_EigenvaluesOnly)->Arg(99)->Arg(499)->Unit(benchmark::kMillisecond);

void BM_AnalyticSpectrum(benchmark::State& state) {
  const MediumSpec m(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(analytic_spectrum(m));
}
BENCHMARK(BM_AnalyticSpectrum)->Arg(499)->Unit(benchmark::kMicrosecond);

void BM_EvolveState(benchmark::State& state) {
  const auto sys = workhorse(499);
  const Propagator prop(full_hamiltonian(sys));
  const auto psi0 = StateVector::basis(sys.dim(), sys.left_index());
  double t = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(prop.evolve(psi0, t += 1.0));
}
BENCHMARK(BM_EvolveState)->Unit(benchmark::kMicrosecond);

void BM_TransitionProbability(benchmark::State& state) {
  const auto sys = workhorse(499);
  const Propagator prop(full_hamiltonian(sys));
  const auto times = uniform_time_grid(1e4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(prop.transition_probability(sys.right_index(), sys.left_index(), times));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TransitionProbability)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SampleCouplings(benchmark::State& state) {
  const MediumSpec m(499, 0.1);
  const DisorderSpec d(5e-3, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_couplings(m, d, 0));
}
BENCHMARK(BM_SampleCouplings)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
