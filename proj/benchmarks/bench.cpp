#include <benchmark/benchmark.h>

#include "mtw/braid.hpp"
#include "mtw/corpus.hpp"
#include "mtw/engine.hpp"
#include "mtw/sweep.hpp"

using namespace mtw;

namespace {

MultiTwist one(const std::string& c, long n) { return MultiTwist({TwistComponent{CurveRef(c), n}}); }

void BM_GeometricIntersection(benchmark::State& state) {
  auto c = load_config("torus");
  Drawing d = build_drawing(c);
  int x = d.find("s2_3"), y = d.find("s3_m2");
  for (auto _ : state) benchmark::DoNotOptimize(geometric_intersection(d, x, y));
}
BENCHMARK(BM_GeometricIntersection);

// i(a, T^n a) for a single twist with growing exponent.
void BM_TwistImage(benchmark::State& state) {
  auto c = load_config("genus2");
  Drawing d = build_drawing(c);
  int a = d.find("Dx1");
  MultiTwist t = one("Dy1", state.range(0));
  for (auto _ : state) {
    Drawing e = d;
    int img = e.add_curve("img", apply_sequence(e, {t}, a).word);
    benchmark::DoNotOptimize(geometric_intersection(e, a, img));
  }
}
BENCHMARK(BM_TwistImage)->RangeMultiplier(2)->Range(1, 16);

void BM_DecideBraidedFigure1(benchmark::State& state) {
  auto c = load_config("figure1");
  Drawing d = build_drawing(c);
  std::vector<int> ids(d.num_curves());
  for (int k = 0; k < d.num_curves(); ++k) ids[k] = k;
  auto data = intersection_data(d, ids);
  const auto &A = c.multitwists.at("A"), &B = c.multitwists.at("B");
  for (auto _ : state) benchmark::DoNotOptimize(decide_braided(A, B, data).braided);
}
BENCHMARK(BM_DecideBraidedFigure1);

void BM_OracleFigure1(benchmark::State& state) {
  auto c = load_config("figure1");
  Drawing d = build_drawing(c);
  const auto &A = c.multitwists.at("A"), &B = c.multitwists.at("B");
  for (auto _ : state) benchmark::DoNotOptimize(mapping_classes_equal(d, {A, B, A}, {B, A, B}, *c.test_set));
}
BENCHMARK(BM_OracleFigure1)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.samples = static_cast<int>(state.range(0));
  cfg.checks = kAllChecks;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg).instances.size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
