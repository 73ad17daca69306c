// Microbenchmarks for the hot paths: coboundary assembly, Laplacian
// formation, eigendecomposition, both centralities, and a full
// Monte-Carlo run.
#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <utility>

#include "sheafcent/centrality.hpp"
#include "sheafcent/deception.hpp"
#include "sheafcent/experiment.hpp"
#include "sheafcent/graph.hpp"
#include "sheafcent/rng.hpp"
#include "sheafcent/sheaf.hpp"
#include "sheafcent/spectral.hpp"

namespace {

using namespace sheafcent;

struct Fixture {
  Graph graph;
  DeceptionAssignment assignment;
  CoboundaryMatrix delta;
  Eigen::MatrixXd laplacian;
  Spectrum spectrum;
};

const Fixture& fixture(int n, double p) {
  static std::map<std::pair<int, double>, Fixture> cache;
  auto it = cache.find({n, p});
  if (it == cache.end()) {
    Fixture f{erdos_renyi(n, p, 1), {}, {}, {}, {}};
    f.assignment.opinions = sample_opinions(n, 2);
    f.assignment.relations.resize(static_cast<std::size_t>(n));
    RandomEngine eng(3);
    for (auto& r : f.assignment.relations)
      r = static_cast<RelationType>(uniform_below(eng, 3));
    f.assignment.tau = 0.4;
    f.delta = build_coboundary(f.graph, f.assignment);
    f.laplacian = sheaf_laplacian(f.delta).matrix;
    f.spectrum = eigh(f.laplacian);
    it = cache.emplace(std::make_pair(n, p), std::move(f)).first;
  }
  return it->second;
}

void BM_BuildCoboundary(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) {
    CoboundaryMatrix delta = build_coboundary(f.graph, f.assignment);
    benchmark::DoNotOptimize(delta.matrix.data());
  }
}
BENCHMARK(BM_BuildCoboundary)->Arg(100)->Arg(300);

void BM_SheafLaplacian(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) {
    SheafLaplacian lap = sheaf_laplacian(f.delta);
    benchmark::DoNotOptimize(lap.matrix.data());
  }
}
BENCHMARK(BM_SheafLaplacian)->Arg(100)->Arg(300);

void BM_Eigh(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) {
    Spectrum s = eigh(f.laplacian);
    benchmark::DoNotOptimize(s.eigenvalues.data());
  }
}
BENCHMARK(BM_Eigh)->Arg(100)->Arg(300);

void BM_GraphCentrality(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) {
    CentralityVector c = laplacian_centrality(f.graph);
    benchmark::DoNotOptimize(c.scores.data());
  }
}
BENCHMARK(BM_GraphCentrality)->Arg(100)->Arg(300);

void BM_SheafCentralityFrozen(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) {
    CentralityVector c = laplacian_centrality(f.graph, f.delta);
    benchmark::DoNotOptimize(c.scores.data());
  }
}
BENCHMARK(BM_SheafCentralityFrozen)->Arg(100)->Arg(300);

void BM_SheafCentralityRebuild(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) {
    CentralityVector c = laplacian_centrality_rebuild(f.graph, f.assignment);
    benchmark::DoNotOptimize(c.scores.data());
  }
}
BENCHMARK(BM_SheafCentralityRebuild)->Arg(100);

void BM_DffCentrality(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Fixture& f = fixture(n, 0.1);
  const Eigen::VectorXd weights = uniform_distribution(n);
  for (auto _ : state) {
    CentralityVector c =
        dff_centrality(f.spectrum, weights, 0.5,
                       CentralitySource::SheafLaplacian);
    benchmark::DoNotOptimize(c.scores.data());
  }
}
BENCHMARK(BM_DffCentrality)->Arg(100)->Arg(300);

void BM_RunSingle(benchmark::State& state) {
  const Fixture& f = fixture(100, 0.1);
  ExperimentConfig cfg;
  cfg.kinds = {CentralityKind::LaplacianEnergy};
  cfg.tau_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RunResult r = run_single(f.graph, cfg, run_seed_for(1, static_cast<int>(seed++ % 16)));
    benchmark::DoNotOptimize(r.per_kind[0].scores.data());
  }
}
BENCHMARK(BM_RunSingle);

}  // namespace

BENCHMARK_MAIN();
