#include <benchmark/benchmark.h>

#include <cmath>

#include "redspec/convolution.hpp"
#include "redspec/corpus.hpp"
#include "redspec/evolution.hpp"
#include "redspec/spectra.hpp"

using namespace redspec;

namespace {

SampledSignal tone(std::size_t n, double dt) {
  return SampledSignal::generate(Domain::HalfLine, 0.0, dt, n, 1,
                                 [](double t, cplx* v) { v[0] = std::polar(1.0, t) + std::exp(-t); });
}

void BM_Convolve(benchmark::State& st) {
  auto f = tone(static_cast<std::size_t>(st.range(0)), 0.05);
  auto k = bump_kernel(KernelSampling{0.05});
  for (auto _ : st) benchmark::DoNotOptimize(convolve_restricted(f, k));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_Convolve)->RangeMultiplier(4)->Range(1 << 12, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_LaplaceLine(benchmark::State& st) {
  auto f = tone(static_cast<std::size_t>(st.range(0)), 0.05);
  for (auto _ : st) benchmark::DoNotOptimize(laplace_line(f, 0.1, -5.0, 0.1, 101));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_LaplaceLine)->RangeMultiplier(4)->Range(1 << 12, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_LaplaceDirect(benchmark::State& st) {
  auto f = tone(static_cast<std::size_t>(st.range(0)), 0.05);
  for (auto _ : st) benchmark::DoNotOptimize(laplace_transform(f, cplx(0.1, 1.0)));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_LaplaceDirect)->RangeMultiplier(4)->Range(1 << 12, 1 << 16);

void BM_TestRegular(benchmark::State& st) {
  auto c = make_corpus_signal("exp_iw1");
  auto h = c.half_line();
  for (auto _ : st) benchmark::DoNotOptimize(test_regular(h, 2.0, FunctionClass::C0, KernelFamily::S));
}
BENCHMARK(BM_TestRegular)->Unit(benchmark::kMillisecond);

void BM_ReducedSpectrum(benchmark::State& st) {
  auto c = make_corpus_signal("inv_mod");
  auto h = c.half_line();
  FrequencyGrid g(-2.0, 2.0, 0.1);
  for (auto _ : st) benchmark::DoNotOptimize(reduced_spectrum(h, FunctionClass::C0, KernelFamily::S, g));
}
BENCHMARK(BM_ReducedSpectrum)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_SolveEvolution(benchmark::State& st) {
  const auto d = static_cast<int>(st.range(0));
  EvolutionProblem p;
  p.A = Eigen::MatrixXcd::Identity(d, d) * cplx(-0.5, 1.0);
  p.u0 = Eigen::VectorXcd::Ones(d);
  p.phi = SampledSignal::generate(Domain::HalfLine, 0.0, 0.005, 120001, static_cast<std::size_t>(d),
                                  [d](double t, cplx* v) {
                                    for (int j = 0; j < d; ++j) v[j] = std::polar(1.0, 0.3 * (j + 1) * t);
                                  });
  for (auto _ : st) benchmark::DoNotOptimize(solve_evolution(p));
}
BENCHMARK(BM_SolveEvolution)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
