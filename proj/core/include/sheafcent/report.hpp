// report.hpp — plot-ready serialization of experiment reports.
#pragma once

#include <iosfwd>
#include <string_view>

#include "sheafcent/experiment.hpp"

namespace sheafcent {

const char* kind_name(CentralityKind kind) noexcept;         // laplacian | dff
CentralityKind kind_from_string(std::string_view token);     // throws ParseError

const char* distribution_name(DffDistribution d) noexcept;   // uniform | degree
DffDistribution distribution_from_string(std::string_view token);

const char* semantics_name(DeletionSemantics s) noexcept;    // frozen | rebuild
DeletionSemantics semantics_from_string(std::string_view token);

// Long format, one row per (kind, tau, relation):
//   tau,relation,centrality,mean,std,runs
// mean/std pool every (run, member vertex) sample of the cell; runs is the
// pooled sample count. Byte-deterministic for a fixed report.
void write_sweep_csv(std::ostream& out, const ExperimentReport& report);

// Summary with per-relation influence totals S_R per centrality kind, the
// config echo, the graph size, per-run seeds, and wall-clock time.
void write_summary_json(std::ostream& out, const ExperimentReport& report);

// Per-run scores, one row per (run, kind, tau, vertex):
//   run,centrality,tau,vertex,relation,score
void write_raw_csv(std::ostream& out, const ExperimentReport& report,
                   const std::vector<RunResult>& raw);

}  // namespace sheafcent
