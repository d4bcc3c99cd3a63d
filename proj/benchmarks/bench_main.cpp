#include <benchmark/benchmark.h>

#include <cmath>

#include "gkdv/solver.hpp"
#include "gkdv/spectral.hpp"
#include "gkdv/virial.hpp"

using namespace gkdv;

namespace {

Field gaussian(const Grid& g, double a) {
  return Field::sample(g, [a](double x) { return a * std::exp(-x * x); });
}

}  // namespace

static void BM_SpectralDerivative(benchmark::State& st) {
  const Grid g(400.0, static_cast<std::size_t>(st.range(0)));
  const Field f = gaussian(g, 0.05);
  for (auto _ : st) benchmark::DoNotOptimize(spectral_derivative(f, 3));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_SpectralDerivative)->RangeMultiplier(4)->Range(1024, 65536)->Complexity();

static void BM_EtdRk4Step(benchmark::State& st) {
  const Grid g(400.0, static_cast<std::size_t>(st.range(0)));
  const auto spec = st.range(1) ? NonlinearitySpec::gardner(1.0) : NonlinearitySpec::kdv();
  EtdRk4 solver(g, spec, 5e-4);
  const Field f = gaussian(g, 0.05);
  AlignedComplex spectrum(g.size() / 2 + 1);
  solver.to_spectrum(f.values(), spectrum);
  solver.set_reference_amplitude(0.05);
  double t = 0.0;
  for (auto _ : st) {
    solver.advance(spectrum, t);
    t += 5e-4;
  }
  st.SetLabel(st.range(1) ? "gardner" : "kdv");
}
BENCHMARK(BM_EtdRk4Step)->ArgsProduct({{1024, 8192}, {0, 1}});

static void BM_VirialRow(benchmark::State& st) {
  const Grid g(400.0, 8192);
  const State s(20.0, gaussian(g, 0.05));
  const auto spec = NonlinearitySpec::kdv();
  const auto law = ScalingLaw::dynamic();
  const auto phi2 = WeightProfile::tanh(2), phi3 = WeightProfile::tanh(3);
  const auto psi = WeightProfile::tanh(1);
  for (auto _ : st) {
    benchmark::DoNotOptimize(dI_dt_rhs(s, psi, law, 20.0, spec));
    benchmark::DoNotOptimize(dJ_dt_rhs(s, phi2, law, 20.0, spec));
    benchmark::DoNotOptimize(dK_dt_rhs(s, phi3, law, 20.0, spec));
  }
}
BENCHMARK(BM_VirialRow);
BENCHMARK_MAIN();
