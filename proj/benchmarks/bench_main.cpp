#include <benchmark/benchmark.h>

#include "satake/embedding.hpp"
#include "satake/fan.hpp"
#include "satake/weights.hpp"

using namespace satake;

static void BM_BuildFanMinimalType(benchmark::State& state,
                                   const std::string& label) {
  RootDatum rd = RootDatum::build(label);
  rd.weyl_elements();  // warm the lazy enumeration
  for (auto _ : state) {
    Fan f = build_fan_Ft(rd, {});
    benchmark::DoNotOptimize(f.cones.size());
  }
}
BENCHMARK_CAPTURE(BM_BuildFanMinimalType, A2, std::string("A2"));
BENCHMARK_CAPTURE(BM_BuildFanMinimalType, B2, std::string("B2"));
BENCHMARK_CAPTURE(BM_BuildFanMinimalType, G2, std::string("G2"));

static void BM_ConeRoundTrip(benchmark::State& state) {
  RootDatum rd = RootDatum::build("B3");
  std::vector<Vec> ineqs;
  for (int i = 0; i < rd.rank(); ++i)
    ineqs.push_back(scale(-1, rd.covector(rd.simple_roots()[i])));
  for (auto _ : state) {
    Cone c = Cone::from_ineqs(rd.rank(), ineqs);
    Cone back = Cone::from_gens(rd.rank(), c.gens());
    benchmark::DoNotOptimize(back.dim());
  }
}
BENCHMARK(BM_ConeRoundTrip);

static void BM_WeightSystem(benchmark::State& state, const std::string& label,
                            Vec fw) {
  RootDatum rd = RootDatum::build(label);
  rd.weyl_elements();
  Vec hw = rd.from_fw_coords(fw);
  for (auto _ : state) {
    WeightSystem ws = weight_system(rd, hw);
    benchmark::DoNotOptimize(ws.weights.size());
  }
}
BENCHMARK_CAPTURE(BM_WeightSystem, A2_adjoint, std::string("A2"),
                  Vec{Rat(1), Rat(1)});
BENCHMARK_CAPTURE(BM_WeightSystem, B3_vector, std::string("B3"),
                  Vec{Rat(1), Rat(0), Rat(0)});

static void BM_ClassifySequence(benchmark::State& state) {
  LogAffineSequence s;
  for (int i = 0; i < 32; ++i) {
    s.a.push_back(Rat(i * 7 % 13, 3));
    s.b.push_back(Rat(i % 5, 2));
  }
  for (auto _ : state) {
    SequenceLimitReport r = classify_sequence(s);
    benchmark::DoNotOptimize(r.index_set.size());
  }
}
BENCHMARK(BM_ClassifySequence);

static void BM_PullbackCompare(benchmark::State& state) {
  RootDatum rd = RootDatum::build("A2");
  WeightSystem ws = weight_system(rd, rd.fundamental_weight(0));
  WeightList wl = weight_list_from_rep(rd, ws);
  for (auto _ : state) {
    PullbackReport r = pullback_fan_compare(rd, ws, wl);
    benchmark::DoNotOptimize(r.ok());
  }
}
BENCHMARK(BM_PullbackCompare);

BENCHMARK_MAIN();
