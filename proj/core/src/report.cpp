#include "sheafcent/report.hpp"

#include <json.hpp>
#include <ostream>
#include <string>

#include "sheafcent/errors.hpp"
#include "sheafcent/matrix_io.hpp"

namespace sheafcent {

const char* kind_name(CentralityKind kind) noexcept {
  return kind == CentralityKind::LaplacianEnergy ? "laplacian" : "dff";
}

CentralityKind kind_from_string(std::string_view token) {
  if (token == "laplacian") return CentralityKind::LaplacianEnergy;
  if (token == "dff") return CentralityKind::Dff;
  throw ParseError("unknown centrality kind: '" + std::string(token) +
                   "' (expected laplacian|dff)");
}

const char* distribution_name(DffDistribution d) noexcept {
  return d == DffDistribution::Uniform ? "uniform" : "degree";
}

DffDistribution distribution_from_string(std::string_view token) {
  if (token == "uniform") return DffDistribution::Uniform;
  if (token == "degree") return DffDistribution::Degree;
  throw ParseError("unknown distribution: '" + std::string(token) +
                   "' (expected uniform|degree)");
}

const char* semantics_name(DeletionSemantics s) noexcept {
  return s == DeletionSemantics::Frozen ? "frozen" : "rebuild";
}

DeletionSemantics semantics_from_string(std::string_view token) {
  if (token == "frozen") return DeletionSemantics::Frozen;
  if (token == "rebuild") return DeletionSemantics::Rebuild;
  throw ParseError("unknown deletion semantics: '" + std::string(token) +
                   "' (expected frozen|rebuild)");
}

void write_sweep_csv(std::ostream& out, const ExperimentReport& report) {
  out << "tau,relation,centrality,mean,std,runs\n";
  for (std::size_t ki = 0; ki < report.config.kinds.size(); ++ki) {
    for (std::size_t ti = 0; ti < report.config.tau_grid.size(); ++ti) {
      for (std::size_t ri = 0; ri < kAllRelations.size(); ++ri) {
        const CellStats& cell = report.stats[ki][ti][ri];
        out << format_double(report.config.tau_grid[ti]) << ','
            << to_string(kAllRelations[ri]) << ','
            << kind_name(report.config.kinds[ki]) << ','
            << format_double(cell.mean) << ',' << format_double(cell.stddev)
            << ',' << cell.samples << '\n';
      }
    }
  }
}

void write_summary_json(std::ostream& out, const ExperimentReport& report) {
  nlohmann::ordered_json j;
  j["graph"] = {{"vertices", report.n_vertices}, {"edges", report.n_edges}};

  nlohmann::ordered_json cfg;
  nlohmann::ordered_json kinds = nlohmann::ordered_json::array();
  for (CentralityKind k : report.config.kinds) kinds.push_back(kind_name(k));
  cfg["kinds"] = std::move(kinds);
  cfg["tau_grid"] = report.config.tau_grid;
  cfg["runs"] = report.config.runs;
  cfg["master_seed"] = report.config.master_seed;
  cfg["dff_time"] = report.config.dff_time;
  cfg["dff_distribution"] = distribution_name(report.config.dff_distribution);
  cfg["deletion_semantics"] = semantics_name(report.config.deletion_semantics);
  j["config"] = std::move(cfg);

  nlohmann::ordered_json influence;
  for (std::size_t ki = 0; ki < report.config.kinds.size(); ++ki) {
    nlohmann::ordered_json per_relation;
    for (std::size_t ri = 0; ri < kAllRelations.size(); ++ri)
      per_relation[to_string(kAllRelations[ri])] = report.influence[ki][ri];
    influence[kind_name(report.config.kinds[ki])] = std::move(per_relation);
  }
  j["influence"] = std::move(influence);

  j["run_seeds"] = report.run_seeds;
  j["wall_seconds"] = report.wall_seconds;
  out << j.dump(2) << '\n';
}

void write_raw_csv(std::ostream& out, const ExperimentReport& report,
                   const std::vector<RunResult>& raw) {
  out << "run,centrality,tau,vertex,relation,score\n";
  for (std::size_t run = 0; run < raw.size(); ++run) {
    for (std::size_t ki = 0; ki < report.config.kinds.size(); ++ki) {
      const KindRunResult& kr = raw[run].per_kind[ki];
      for (std::size_t ti = 0; ti < report.config.tau_grid.size(); ++ti) {
        for (int v = 0; v < report.n_vertices; ++v) {
          out << run << ',' << kind_name(report.config.kinds[ki]) << ','
              << format_double(report.config.tau_grid[ti]) << ',' << v << ','
              << to_string(kr.relations[static_cast<std::size_t>(v)]) << ','
              << format_double(kr.scores(static_cast<Eigen::Index>(ti), v))
              << '\n';
        }
      }
    }
  }
}

}  // namespace sheafcent
