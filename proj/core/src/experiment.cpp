#include "sheafcent/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "sheafcent/errors.hpp"
#include "sheafcent/rng.hpp"
#include "sheafcent/spectral.hpp"

namespace sheafcent {

std::vector<double> default_tau_grid(int points) {
  if (points < 1) throw std::invalid_argument("tau grid needs >= 1 point");
  if (points == 1) return {1.0};
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k)
    grid[static_cast<std::size_t>(k)] =
        static_cast<double>(k) / static_cast<double>(points - 1);
  return grid;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.kinds.empty()) throw std::invalid_argument("no centrality kinds");
  for (std::size_t i = 0; i < cfg.kinds.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.kinds.size(); ++j) {
      if (cfg.kinds[i] == cfg.kinds[j])
        throw std::invalid_argument("duplicate centrality kind");
    }
  }
  if (cfg.tau_grid.empty()) throw std::invalid_argument("empty tau grid");
  for (double tau : cfg.tau_grid) {
    if (!(tau >= 0.0 && tau <= 1.0))
      throw std::invalid_argument("tau values must lie in [0, 1]");
  }
  if (!std::is_sorted(cfg.tau_grid.begin(), cfg.tau_grid.end()))
    throw std::invalid_argument("tau grid must be sorted ascending");
  if (cfg.runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (!(cfg.dff_time > 0.0))
    throw std::invalid_argument("diffusion time must be > 0");
  if (cfg.workers < 0) throw std::invalid_argument("workers must be >= 0");
}

std::uint64_t run_seed_for(std::uint64_t master_seed, int run_index) {
  return mix_seed(master_seed, static_cast<std::uint64_t>(run_index));
}

namespace {

Eigen::VectorXd dff_weights(const Graph& g, const ExperimentConfig& cfg) {
  return cfg.dff_distribution == DffDistribution::Uniform
             ? uniform_distribution(g.vertex_count())
             : degree_distribution(g);
}

Eigen::VectorXd baseline_scores(const Graph& g, const ExperimentConfig& cfg,
                                CentralityKind kind) {
  if (kind == CentralityKind::LaplacianEnergy)
    return laplacian_centrality(g).scores;
  return dff_centrality(eigh(graph_laplacian(g)), dff_weights(g, cfg),
                        cfg.dff_time, CentralitySource::GraphLaplacian)
      .scores;
}

}  // namespace

RunResult run_single(const Graph& g, const ExperimentConfig& cfg,
                     std::uint64_t run_seed) {
  validate(cfg);
  const int n = g.vertex_count();
  if (n < 3 || g.edge_count() < 1)
    throw std::invalid_argument(
        "experiment requires at least 3 vertices and 1 edge");

  RunResult result;
  result.seed = run_seed;
  result.opinions = sample_opinions(n, mix_seed(run_seed, 1));

  const auto grid_size = static_cast<Eigen::Index>(cfg.tau_grid.size());
  result.per_kind.reserve(cfg.kinds.size());
  for (std::size_t ki = 0; ki < cfg.kinds.size(); ++ki) {
    const CentralityKind kind = cfg.kinds[ki];
    KindRunResult kr;
    kr.baseline = baseline_scores(g, cfg, kind);
    // Stratification ranks by influence; for diffusion scores smaller means
    // more influential, so the sign flips.
    const Eigen::VectorXd influence =
        kind == CentralityKind::Dff ? Eigen::VectorXd(-kr.baseline) : kr.baseline;
    kr.relations = assign_relations_stratified(
        influence, mix_seed(run_seed, 2 + static_cast<std::uint64_t>(ki)));

    kr.scores.resize(grid_size, n);
    DeceptionAssignment a{result.opinions, kr.relations, 1.0};
    for (Eigen::Index ti = 0; ti < grid_size; ++ti) {
      a.tau = cfg.tau_grid[static_cast<std::size_t>(ti)];
      if (kind == CentralityKind::LaplacianEnergy) {
        kr.scores.row(ti) =
            (cfg.deletion_semantics == DeletionSemantics::Frozen
                 ? laplacian_centrality(g, build_coboundary(g, a))
                 : laplacian_centrality_rebuild(g, a))
                .scores.transpose();
      } else {
        const SheafLaplacian lap = sheaf_laplacian(build_coboundary(g, a));
        kr.scores.row(ti) = dff_centrality(eigh(lap.matrix), dff_weights(g, cfg),
                                           cfg.dff_time,
                                           CentralitySource::SheafLaplacian)
                                .scores.transpose();
      }
    }
    result.per_kind.push_back(std::move(kr));
  }
  return result;
}

double influence_score(const std::vector<RunResult>& runs,
                       std::size_t kind_index, RelationType relation,
                       int n_vertices) {
  if (runs.empty()) throw std::invalid_argument("no run records");
  double total = 0.0;
  for (const auto& run : runs) {
    const KindRunResult& kr = run.per_kind.at(kind_index);
    for (int v = 0; v < n_vertices; ++v) {
      if (kr.relations[static_cast<std::size_t>(v)] == relation)
        total += kr.scores.col(v).mean();
    }
  }
  return total / static_cast<double>(n_vertices);
}

ExperimentReport tau_sweep(const Graph& g, const ExperimentConfig& cfg,
                           std::vector<RunResult>* raw_out) {
  validate(cfg);
  if (g.vertex_count() < 3 || g.edge_count() < 1)
    throw std::invalid_argument(
        "experiment requires at least 3 vertices and 1 edge");
  const auto start = std::chrono::steady_clock::now();

  const int runs = cfg.runs;
  std::vector<RunResult> results(static_cast<std::size_t>(runs));

  unsigned hardware = std::thread::hardware_concurrency();
  if (hardware == 0) hardware = 1;
  const int workers = std::min(
      runs, cfg.workers > 0 ? cfg.workers : static_cast<int>(hardware));

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::string error_message;

  auto work = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= runs) return;
      const std::uint64_t seed = run_seed_for(cfg.master_seed, i);
      try {
        results[static_cast<std::size_t>(i)] = run_single(g, cfg, seed);
      } catch (const std::exception& e) {
        const std::scoped_lock lock(error_mutex);
        if (!failed.exchange(true)) {
          error_message = "run " + std::to_string(i) + " (seed " +
                          std::to_string(seed) + ") failed: " + e.what();
        }
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw Error(error_message);

  ExperimentReport report;
  report.config = cfg;
  report.n_vertices = g.vertex_count();
  report.n_edges = g.edge_count();
  report.run_seeds.reserve(static_cast<std::size_t>(runs));
  for (int i = 0; i < runs; ++i)
    report.run_seeds.push_back(run_seed_for(cfg.master_seed, i));

  const std::size_t grid = cfg.tau_grid.size();
  report.stats.assign(cfg.kinds.size(),
                      std::vector<std::array<CellStats, 3>>(grid));
  report.influence.assign(cfg.kinds.size(), {0.0, 0.0, 0.0});

  for (std::size_t ki = 0; ki < cfg.kinds.size(); ++ki) {
    for (std::size_t ti = 0; ti < grid; ++ti) {
      for (std::size_t ri = 0; ri < kAllRelations.size(); ++ri) {
        const RelationType rel = kAllRelations[ri];
        double sum = 0.0;
        long count = 0;
        for (const auto& run : results) {
          const KindRunResult& kr = run.per_kind[ki];
          for (int v = 0; v < report.n_vertices; ++v) {
            if (kr.relations[static_cast<std::size_t>(v)] != rel) continue;
            sum += kr.scores(static_cast<Eigen::Index>(ti), v);
            ++count;
          }
        }
        CellStats& cell = report.stats[ki][ti][ri];
        cell.samples = count;
        if (count == 0) continue;
        cell.mean = sum / static_cast<double>(count);
        double sq = 0.0;
        for (const auto& run : results) {
          const KindRunResult& kr = run.per_kind[ki];
          for (int v = 0; v < report.n_vertices; ++v) {
            if (kr.relations[static_cast<std::size_t>(v)] != rel) continue;
            const double d = kr.scores(static_cast<Eigen::Index>(ti), v) - cell.mean;
            sq += d * d;
          }
        }
        cell.stddev = std::sqrt(sq / static_cast<double>(count));
      }
    }
    for (std::size_t ri = 0; ri < kAllRelations.size(); ++ri)
      report.influence[ki][ri] =
          influence_score(results, ki, kAllRelations[ri], report.n_vertices);
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (raw_out != nullptr) *raw_out = std::move(results);
  return report;
}

}  // namespace sheafcent
