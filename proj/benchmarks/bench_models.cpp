#include <benchmark/benchmark.h>

#include <vector>

#include "trigas/dynamics.hpp"
#include "trigas/fitting.hpp"
#include "trigas/recombination.hpp"
#include "trigas/scattering.hpp"

using namespace trigas;

namespace {

const PhysicalConstants pc = PhysicalConstants::li6();
const UniversalConstants uc;

const ScatteringTable& sample_table() {
  static const ScatteringTable table =
      ScatteringTable::load_file(std::string(TRIGAS_DATA_DIR) + "/li6_sample_a_table.csv");
  return table;
}

EfimovParams paper_params() { return EfimovParams::from_inv_a0(6.9e-3, 0.016, pc); }

}  // namespace

static void BM_L3EqualA(benchmark::State& state) {
  const EfimovParams p = paper_params();
  double a = -5000.0 * pc.a0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(l3_equal_a(a, p, uc, pc));
  }
}
BENCHMARK(BM_L3EqualA);

static void BM_L3ModelCurve(benchmark::State& state) {
  const EfimovParams p = paper_params();
  std::vector<double> grid;
  for (double b = 845.0; b <= 1500.0; b += 1.0) grid.push_back(b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(l3_model_curve(sample_table(), p, uc, pc, 30e-9, grid));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}
BENCHMARK(BM_L3ModelCurve);

static void BM_ScanResonances(benchmark::State& state) {
  const EfimovParams p = paper_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_resonance_fields(sample_table(), p, uc, pc));
  }
}
BENCHMARK(BM_ScanResonances);

static void BM_NumberAnalytic(benchmark::State& state) {
  const DecayModel m{0.357, 1e-32, TrapConfig::custom(TrapFrequencies{10, 20, 40}), 900.0, false};
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-6;
    benchmark::DoNotOptimize(number_analytic(m, 1e5, 100e-9, t, pc));
  }
}
BENCHMARK(BM_NumberAnalytic);

static void BM_EvolveNumeric(benchmark::State& state) {
  const DecayModel m{0.357, 1e-32, TrapConfig::custom(TrapFrequencies{10, 20, 40}), 900.0,
                     state.range(0) != 0};
  std::vector<double> grid(30);
  for (int i = 0; i < 30; ++i) grid[i] = 10.0 * i / 29.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_numeric(m, 1e5, 100e-9, grid, pc));
  }
}
BENCHMARK(BM_EvolveNumeric)->Arg(0)->Arg(1);  // constant-T / anti-evaporation

static void BM_FitDecay(benchmark::State& state) {
  const TrapConfig trap = TrapConfig::custom(TrapFrequencies{10, 20, 40});
  const DecayModel m{0.357, 1e-32, trap, 900.0, false};
  std::vector<double> grid(30);
  for (int i = 0; i < 30; ++i) grid[i] = 10.0 * i / 29.0;
  const DecaySeries series = synthesize(m, 1e5, 100e-9, grid, 0.05, 1, pc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_decay(series, trap, 900.0, 0.357, pc));
  }
}
BENCHMARK(BM_FitDecay);

static void BM_FitEfimov(benchmark::State& state) {
  const EfimovParams truth = paper_params();
  const std::vector<double> fields = {910, 920, 935, 950, 970, 1000,
                                      1040, 1090, 1150, 1250, 1350, 1500};
  const auto curve = l3_model_curve(sample_table(), truth, uc, pc, 30e-9, fields);
  std::vector<L3Point> points;
  for (const L3CurvePoint& c : curve)
    points.push_back(L3Point{c.B_gauss, c.L3_zero_T, 0.05 * c.L3_zero_T});
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_efimov(points, sample_table(), uc, pc));
  }
}
BENCHMARK(BM_FitEfimov);

BENCHMARK_MAIN();
