// sheafcent CLI: random-graph generation, one-shot centrality tables, and the
// Monte-Carlo honesty sweep.
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 numeric
// failure.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sheafcent/centrality.hpp"
#include "sheafcent/deception.hpp"
#include "sheafcent/errors.hpp"
#include "sheafcent/experiment.hpp"
#include "sheafcent/graph.hpp"
#include "sheafcent/matrix_io.hpp"
#include "sheafcent/report.hpp"
#include "sheafcent/rng.hpp"
#include "sheafcent/sheaf.hpp"
#include "sheafcent/spectral.hpp"

namespace {

using namespace sheafcent;

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file: " + path);
  try {
    return load_edge_list(in).graph;
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file for writing: " + path);
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("failed while writing: " + path);
}

struct GenErArgs {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 1;
  std::string out_path;
};

int cmd_gen_er(const GenErArgs& args) {
  const Graph g = erdos_renyi(args.n, args.p, args.seed);
  std::ostringstream header;
  header << "G(n=" << args.n << ", p=" << format_double(args.p)
         << ") seed=" << args.seed;
  auto out = open_output(args.out_path);
  write_edge_list(g, out, header.str());
  finish_output(out, args.out_path);
  std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  return 0;
}

struct CentralityArgs {
  std::string graph_path;
  std::string kind = "laplacian";
  std::string source = "sheaf";
  double tau = 1.0;
  std::uint64_t seed = 1;
  std::string opinions_path;
  std::string relations_path;
  double dff_time = 0.5;
  std::string distribution = "uniform";
  std::string semantics = "frozen";
};

int cmd_centrality(const CentralityArgs& args) {
  const Graph g = load_graph_file(args.graph_path);
  const int n = g.vertex_count();
  const CentralityKind kind = kind_from_string(args.kind);
  const DffDistribution dist = distribution_from_string(args.distribution);
  const DeletionSemantics semantics = semantics_from_string(args.semantics);

  auto dff_weights = [&] {
    return dist == DffDistribution::Uniform ? uniform_distribution(n)
                                            : degree_distribution(g);
  };
  auto graph_scores = [&] {
    return kind == CentralityKind::LaplacianEnergy
               ? laplacian_centrality(g)
               : dff_centrality(eigh(graph_laplacian(g)), dff_weights(),
                                args.dff_time, CentralitySource::GraphLaplacian);
  };

  CentralityVector result;
  std::vector<RelationType> relations;
  bool have_relations = false;

  if (args.source == "graph") {
    result = graph_scores();
  } else {
    DeceptionAssignment a;
    a.tau = args.tau;
    if (args.opinions_path.empty()) {
      a.opinions = sample_opinions(n, mix_seed(args.seed, 1));
    } else {
      std::ifstream in(args.opinions_path);
      if (!in) throw IoError("cannot open opinions file: " + args.opinions_path);
      try {
        a.opinions = load_opinions(in, n);
      } catch (const ParseError& e) {
        throw ParseError(args.opinions_path + ": " + e.what());
      }
    }
    if (args.relations_path.empty()) {
      const CentralityVector baseline = graph_scores();
      const Eigen::VectorXd influence = kind == CentralityKind::Dff
                                            ? Eigen::VectorXd(-baseline.scores)
                                            : baseline.scores;
      a.relations = assign_relations_stratified(influence, mix_seed(args.seed, 2));
    } else {
      std::ifstream in(args.relations_path);
      if (!in)
        throw IoError("cannot open relations file: " + args.relations_path);
      try {
        a.relations = load_relations(in, n);
      } catch (const ParseError& e) {
        throw ParseError(args.relations_path + ": " + e.what());
      }
    }
    relations = a.relations;
    have_relations = true;

    if (kind == CentralityKind::LaplacianEnergy) {
      result = semantics == DeletionSemantics::Frozen
                   ? laplacian_centrality(g, build_coboundary(g, a))
                   : laplacian_centrality_rebuild(g, a);
    } else {
      const SheafLaplacian lap = sheaf_laplacian(build_coboundary(g, a));
      result = dff_centrality(eigh(lap.matrix), dff_weights(), args.dff_time,
                              CentralitySource::SheafLaplacian);
    }
  }

  const std::vector<int> order = rank_vertices(result);
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    rank[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos) + 1;

  std::cout << "vertex,label,relation,score,rank\n";
  for (int v = 0; v < n; ++v) {
    std::cout << v << ',' << g.labels()[static_cast<std::size_t>(v)] << ','
              << (have_relations ? to_string(relations[static_cast<std::size_t>(v)])
                                 : "-")
              << ',' << format_double(result.scores[v]) << ','
              << rank[static_cast<std::size_t>(v)] << '\n';
  }
  return 0;
}

struct SweepArgs {
  std::string config_path;
  std::string graph_path;
  int er_n = -1;
  double er_p = -1.0;
  std::uint64_t er_seed = 1;
  std::vector<std::string> kinds = {"laplacian"};
  int runs = 100;
  std::uint64_t master_seed = 1;
  int tau_points = 41;
  std::vector<double> tau_grid;
  double dff_time = 0.5;
  std::string dff_distribution = "uniform";
  std::string semantics = "frozen";
  int workers = 0;
  std::string out_csv = "sweep.csv";
  std::string out_json = "sweep.json";
  std::string out_raw;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Applies a flat "key = value" file to the sweep options. Keys mirror the
// long flags without the leading dashes; '#' starts a comment; flags given
// on the command line win. Values are validated exactly like flag values.
void apply_flat_config(CLI::App* sweep, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos)
      throw ParseError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(where + ": empty key");
    if (value.empty()) throw ParseError(where + ": empty value for '" + key + "'");
    if (key == "config")
      throw ParseError(where + ": 'config' cannot be set from a config file");
    CLI::Option* opt = sweep->get_option_no_throw("--" + key);
    if (opt == nullptr) throw ParseError(where + ": unknown key '" + key + "'");
    if (opt->count() > 0) continue;  // the command-line flag overrides
    try {
      if (opt->get_items_expected_max() > 1) {
        std::stringstream parts(value);
        std::string part;
        while (std::getline(parts, part, ',')) {
          part = trim(part);
          if (!part.empty()) opt->add_result(part);
        }
      } else {
        opt->add_result(value);
      }
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
}

int apply_worker_env(int workers) {
  const char* env = std::getenv("SHEAFCENT_WORKERS");
  if (env == nullptr || *env == '\0') return workers;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 0)
    throw std::invalid_argument(
        "SHEAFCENT_WORKERS must be a nonnegative integer");
  return static_cast<int>(value);
}

int cmd_sweep(const SweepArgs& args) {
  const bool from_file = !args.graph_path.empty();
  const bool from_er = args.er_n >= 0 || args.er_p >= 0.0;
  if (from_file == from_er)
    throw std::invalid_argument(
        "pick exactly one graph source: --graph, or --er-n with --er-p");
  if (from_er && (args.er_n < 0 || args.er_p < 0.0))
    throw std::invalid_argument("--er-n and --er-p must be given together");

  const Graph g = from_file ? load_graph_file(args.graph_path)
                            : erdos_renyi(args.er_n, args.er_p, args.er_seed);

  ExperimentConfig cfg;
  cfg.kinds.clear();
  for (const auto& token : args.kinds) cfg.kinds.push_back(kind_from_string(token));
  cfg.tau_grid =
      args.tau_grid.empty() ? default_tau_grid(args.tau_points) : args.tau_grid;
  cfg.runs = args.runs;
  cfg.master_seed = args.master_seed;
  cfg.dff_time = args.dff_time;
  cfg.dff_distribution = distribution_from_string(args.dff_distribution);
  cfg.deletion_semantics = semantics_from_string(args.semantics);
  cfg.workers = apply_worker_env(args.workers);

  std::vector<RunResult> raw;
  const bool want_raw = !args.out_raw.empty();
  const ExperimentReport report = tau_sweep(g, cfg, want_raw ? &raw : nullptr);

  {
    auto out = open_output(args.out_csv);
    write_sweep_csv(out, report);
    finish_output(out, args.out_csv);
  }
  {
    auto out = open_output(args.out_json);
    write_summary_json(out, report);
    finish_output(out, args.out_json);
  }
  if (want_raw) {
    auto out = open_output(args.out_raw);
    write_raw_csv(out, report, raw);
    finish_output(out, args.out_raw);
  }

  std::cout << "graph: n=" << report.n_vertices << " m=" << report.n_edges
            << ", runs=" << report.config.runs
            << ", tau points=" << report.config.tau_grid.size() << '\n';
  for (std::size_t ki = 0; ki < report.config.kinds.size(); ++ki) {
    std::cout << "S[" << kind_name(report.config.kinds[ki]) << "]";
    for (std::size_t ri = 0; ri < kAllRelations.size(); ++ri)
      std::cout << ' ' << to_string(kAllRelations[ri]) << '='
                << format_double(report.influence[ki][ri]);
    std::cout << '\n';
  }
  std::cout << "wrote " << args.out_csv << ", " << args.out_json;
  if (want_raw) std::cout << ", " << args.out_raw;
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectral influence centralities on deception-aware social networks"};
  app.require_subcommand(1);

  GenErArgs gen_args;
  CLI::App* gen = app.add_subcommand(
      "gen-er", "Generate a G(n, p) random graph as an edge-list file");
  gen->add_option("--n", gen_args.n, "vertex count")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--p", gen_args.p, "edge probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--out", gen_args.out_path, "output path")->required();

  CentralityArgs cent_args;
  CLI::App* cent = app.add_subcommand(
      "centrality", "Score one graph under a single honesty assignment");
  cent->add_option("--graph", cent_args.graph_path, "edge-list file")->required();
  cent->add_option("--kind", cent_args.kind, "centrality kind")
      ->check(CLI::IsMember({"laplacian", "dff"}));
  cent->add_option("--source", cent_args.source,
                   "score the disclosure sheaf or the plain graph")
      ->check(CLI::IsMember({"sheaf", "graph"}));
  cent->add_option("--tau", cent_args.tau, "honesty parameter")
      ->check(CLI::Range(0.0, 1.0));
  cent->add_option("--seed", cent_args.seed,
                   "seed for sampled opinions/relations");
  cent->add_option("--opinions", cent_args.opinions_path,
                   "opinions file, one value per line (sheaf source)");
  cent->add_option("--relations", cent_args.relations_path,
                   "relations file, one of honest|prosocial|antisocial per "
                   "line (sheaf source)");
  cent->add_option("--t", cent_args.dff_time, "diffusion time (dff)")
      ->check(CLI::PositiveNumber);
  cent->add_option("--dist", cent_args.distribution, "dff weight distribution")
      ->check(CLI::IsMember({"uniform", "degree"}));
  cent->add_option("--semantics", cent_args.semantics,
                   "vertex-deletion semantics (laplacian on sheaf)")
      ->check(CLI::IsMember({"frozen", "rebuild"}));

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Monte-Carlo honesty sweep producing CSV and JSON reports");
  sweep->add_option("--config", sweep_args.config_path,
                    "flat 'key = value' file mirroring the flags below; "
                    "flags override the file");
  sweep->add_option("--graph", sweep_args.graph_path, "edge-list file");
  sweep->add_option("--er-n", sweep_args.er_n, "generate G(n, p): vertex count")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--er-p", sweep_args.er_p,
                    "generate G(n, p): edge probability")
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--er-seed", sweep_args.er_seed, "generate G(n, p): seed");
  sweep->add_option("--kinds", sweep_args.kinds, "centrality kinds to sweep")
      ->delimiter(',')
      ->check(CLI::IsMember({"laplacian", "dff"}));
  sweep->add_option("--runs", sweep_args.runs, "Monte-Carlo run count")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_args.master_seed, "master seed");
  sweep->add_option("--tau-points", sweep_args.tau_points,
                    "evenly spaced tau grid size")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--tau-grid", sweep_args.tau_grid,
                    "explicit tau values (overrides --tau-points)")
      ->delimiter(',');
  sweep->add_option("--dff-time", sweep_args.dff_time, "diffusion time")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--dff-dist", sweep_args.dff_distribution,
                    "dff weight distribution")
      ->check(CLI::IsMember({"uniform", "degree"}));
  sweep->add_option("--semantics", sweep_args.semantics,
                    "vertex-deletion semantics")
      ->check(CLI::IsMember({"frozen", "rebuild"}));
  sweep->add_option("--workers", sweep_args.workers,
                    "worker threads (0 = all cores); SHEAFCENT_WORKERS "
                    "overrides")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--out-csv", sweep_args.out_csv, "sweep CSV path");
  sweep->add_option("--out-json", sweep_args.out_json, "summary JSON path");
  sweep->add_option("--raw", sweep_args.out_raw,
                    "also write per-run scores to this CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return cmd_gen_er(gen_args);
    if (cent->parsed()) return cmd_centrality(cent_args);
    if (sweep->parsed()) {
      if (!sweep_args.config_path.empty())
        apply_flat_config(sweep, sweep_args.config_path);
      return cmd_sweep(sweep_args);
    }
    std::cerr << "no subcommand given\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
