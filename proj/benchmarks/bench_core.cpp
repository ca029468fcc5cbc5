#include <benchmark/benchmark.h>

#include "cdlab/analysis/cycle.hpp"
#include "cdlab/cdcore/field.hpp"
#include "cdlab/cdcore/identities.hpp"
#include "cdlab/cdcore/integrator.hpp"
#include "cdlab/lie/resolvent.hpp"
#include "cdlab/models/oscillator.hpp"
#include "cdlab/models/simple.hpp"

using namespace cdlab;
namespace md = cdlab::models;

namespace {

cdcore::Trajectory toy_trajectory(double t1) {
  const cdcore::CdSystem sys = md::toy_oscillator({1.0, 1.0, 1.0});
  Vec x0(2);
  x0 << 3.0, 0.0;
  cdcore::IntegrateOptions o;
  o.abs_tol = o.rel_tol = 1e-11;
  o.sample_dt = 0.01;
  return cdcore::integrate(cdcore::make_problem(sys), x0, 0.0, t1, o);
}

void BM_IntegrateToy(benchmark::State& st) {
  const double t1 = static_cast<double>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(toy_trajectory(t1).size());
}
BENCHMARK(BM_IntegrateToy)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_DynamicField(benchmark::State& st) {
  const cdcore::CdSystem sys = md::toy_oscillator({1.0, 1.0, 1.0});
  Vec x(2);
  x << 1.3, 0.4;
  for (auto _ : st) benchmark::DoNotOptimize(cdcore::dynamic_field(sys, x).data());
}
BENCHMARK(BM_DynamicField);

void BM_GFunction(benchmark::State& st) {
  const auto method = st.range(0) == 0 ? md::GMethod::series : md::GMethod::integral;
  for (auto _ : st) benchmark::DoNotOptimize(md::g_function(3.0, 0.005, method));
}
BENCHMARK(BM_GFunction)->Arg(0)->Arg(1);

void BM_OscillatorRoot(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(md::oscillator_root(n, 200.0, md::OscSeries::stable).p);
}
BENCHMARK(BM_OscillatorRoot)->Arg(1)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_ResolventDiscrete(benchmark::State& st) {
  const auto levels = static_cast<Eigen::Index>(st.range(0));
  lie::SpectralData sd;
  sd.omega = Vec::LinSpaced(levels, 0.0, static_cast<double>(levels - 1));
  sd.rho = Vec::Constant(levels, 1.0 / static_cast<double>(levels));
  for (auto _ : st) benchmark::DoNotOptimize(lie::resolvent_discrete(sd, 1.7, 0.05));
}
BENCHMARK(BM_ResolventDiscrete)->Arg(8)->Arg(64)->Arg(512);

void BM_IdentityResiduals(benchmark::State& st) {
  const cdcore::CdSystem sys = md::toy_oscillator({1.0, 1.0, 1.0});
  Vec x(2);
  x << 1.3, 0.4;
  const ScalarFn F = [](const Vec& y) { return y[0] * std::cos(y[1]); };
  const ScalarFn G = [](const Vec& y) { return y[0] * y[0] + std::sin(y[1]); };
  for (auto _ : st) benchmark::DoNotOptimize(cdcore::identity_residuals(sys, x, F, G).size());
}
BENCHMARK(BM_IdentityResiduals)->Unit(benchmark::kMicrosecond);

void BM_DetectCycle(benchmark::State& st) {
  const cdcore::Trajectory tr = toy_trajectory(40.0);
  analysis::CycleOptions o;
  o.angle_coords = {1};
  for (auto _ : st) benchmark::DoNotOptimize(analysis::detect_cycle(tr, o).period);
}
BENCHMARK(BM_DetectCycle)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
