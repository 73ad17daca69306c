// experiment.hpp — Monte-Carlo honesty sweep: sample opinions, stratify
// relation types by baseline influence, score every vertex across a tau grid,
// and aggregate per-relation influence.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sheafcent/centrality.hpp"
#include "sheafcent/deception.hpp"
#include "sheafcent/graph.hpp"

namespace sheafcent {

enum class DeletionSemantics { Frozen, Rebuild };
enum class DffDistribution { Uniform, Degree };

// points >= 2 gives k/(points-1) for k = 0..points-1; points == 1 gives {1}.
std::vector<double> default_tau_grid(int points = 41);

struct ExperimentConfig {
  std::vector<CentralityKind> kinds = {CentralityKind::LaplacianEnergy};
  std::vector<double> tau_grid = default_tau_grid();
  int runs = 100;
  std::uint64_t master_seed = 1;
  double dff_time = 0.5;
  DffDistribution dff_distribution = DffDistribution::Uniform;
  DeletionSemantics deletion_semantics = DeletionSemantics::Frozen;
  int workers = 0;  // 0 = hardware concurrency; never affects results
};

// Throws std::invalid_argument on: empty/duplicate kinds, empty or unsorted
// tau grid, tau outside [0,1], runs < 1, dff_time <= 0, workers < 0.
void validate(const ExperimentConfig& cfg);

// Everything one run produced for one centrality kind.
struct KindRunResult {
  std::vector<RelationType> relations;  // stratified assignment for this run
  Eigen::VectorXd baseline;             // deception-free graph scores
  Eigen::MatrixXd scores;               // tau_grid.size() x n sheaf scores
};

struct RunResult {
  std::uint64_t seed = 0;
  Eigen::VectorXd opinions;
  std::vector<KindRunResult> per_kind;  // parallel to cfg.kinds
};

// One Monte-Carlo run: opinions and relation labels are drawn once from
// run_seed and held fixed across the tau grid. Requires n >= 3 and m >= 1.
RunResult run_single(const Graph& g, const ExperimentConfig& cfg,
                     std::uint64_t run_seed);

// Per-run seed derivation; exposed so reports and tests can reproduce runs.
std::uint64_t run_seed_for(std::uint64_t master_seed, int run_index);

// S_R: sum over runs and over vertices labeled `relation` of the vertex's
// tau-grid mean score, divided by the vertex count.
double influence_score(const std::vector<RunResult>& runs,
                       std::size_t kind_index, RelationType relation,
                       int n_vertices);

struct CellStats {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation over pooled samples
  long samples = 0;     // (run, member vertex) pairs pooled into the cell
};

struct ExperimentReport {
  ExperimentConfig config;
  int n_vertices = 0;
  int n_edges = 0;
  std::vector<std::uint64_t> run_seeds;
  // stats[kind][tau][relation]: pooled over runs and member vertices.
  std::vector<std::vector<std::array<CellStats, 3>>> stats;
  // influence[kind][relation] = S_R.
  std::vector<std::array<double, 3>> influence;
  double wall_seconds = 0.0;
};

// Runs cfg.runs independent runs (optionally in parallel), then aggregates
// serially in run order, so the report is identical for any worker count.
// A failing run aborts the sweep; the error names its index and seed.
// When raw_out is non-null it receives every RunResult in run order.
ExperimentReport tau_sweep(const Graph& g, const ExperimentConfig& cfg,
                           std::vector<RunResult>* raw_out = nullptr);

}  // namespace sheafcent
