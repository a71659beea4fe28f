#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "gga/format.hpp"
#include "gga/universal.hpp"

using namespace gga;

namespace {

Gga loadData(const std::string& name) {
  std::ifstream in(std::string(BENCH_DATA_DIR) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return parseAny(out.str());
}

void BM_PermClosure(benchmark::State& state) {
  auto pts = PointSet::make("v", {"1", "2", "3", "4", "5"});
  std::vector<Permutation> gens = {Permutation::fromCycles(pts, "(1 2 3 4 5)"),
                                   Permutation::fromCycles(pts, "(1 2)")};
  for (auto _ : state) {
    PermAction s5 = PermAction::make(pts, gens);
    benchmark::DoNotOptimize(s5.order());
  }
}
BENCHMARK(BM_PermClosure);

void BM_ScaffoldBuild(benchmark::State& state) {
  Gga g = loadData("bm-s3.bm");
  AugmentedDigraph aug = augment(g);
  for (auto _ : state) {
    CoveringTree t = buildStarCoveringTree(g, aug, "v", static_cast<int>(state.range(0)));
    Scaffolding s = buildCanonical(g, aug, t);
    benchmark::DoNotOptimize(s.verts.size());
  }
}
BENCHMARK(BM_ScaffoldBuild)->Arg(2)->Arg(3)->Arg(4);

void BM_EnumerateRootStabilizer(benchmark::State& state) {
  Gga g = loadData("bm-s3.bm");
  AugmentedDigraph aug = augment(g);
  CoveringTree t = buildStarCoveringTree(g, aug, "v", static_cast<int>(state.range(0)));
  Scaffolding s = buildCanonical(g, aug, t);
  for (auto _ : state) {
    auto els = enumerateUniversal(s, g, EnumerationMode::RootStabilizer);
    benchmark::DoNotOptimize(els.size());
  }
}
BENCHMARK(BM_EnumerateRootStabilizer)->Arg(2)->Arg(3);

void BM_ExtendFull(benchmark::State& state) {
  Gga g = loadData("ex-parity.gga");
  AugmentedDigraph aug = augment(g);
  CoveringTree t = buildStarCoveringTree(g, aug, "v", 3);
  Scaffolding s = buildCanonical(g, aug, t);
  Seed seed{0, 0, g.vertexAction[0].elements().back()};
  for (auto _ : state) {
    UniversalElement e = extendFull(s, s, g, seed);
    benchmark::DoNotOptimize(e.bundleImage.size());
  }
}
BENCHMARK(BM_ExtendFull);

void BM_CheckScaffolding(benchmark::State& state) {
  Gga g = loadData("ex-parity.gga");
  AugmentedDigraph aug = augment(g);
  CoveringTree t = buildStarCoveringTree(g, aug, "v", 2);
  Scaffolding s = buildCanonical(g, aug, t);
  for (auto _ : state) {
    Diagnostics d = checkScaffolding(s, g);
    benchmark::DoNotOptimize(d.ok);
  }
}
BENCHMARK(BM_CheckScaffolding);

}  // namespace

BENCHMARK_MAIN();
