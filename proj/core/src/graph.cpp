#include "sheafcent/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "sheafcent/rng.hpp"

namespace sheafcent {

namespace {

bool valid_label(const std::string& label) {
  if (label.empty() || label.front() == '#') return false;
  for (unsigned char c : label) {
    if (std::isspace(c)) return false;
  }
  return true;
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<Edge> edges,
                        std::vector<std::string> labels) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  std::set<std::string> unique_labels;
  for (const auto& label : labels) {
    if (!valid_label(label))
      throw std::invalid_argument("invalid vertex label: '" + label + "'");
    if (!unique_labels.insert(label).second)
      throw std::invalid_argument("duplicate vertex label: '" + label + "'");
  }

  std::set<std::pair<int, int>> seen;
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop not allowed");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second)
      throw std::invalid_argument("duplicate edge");
  }

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.labels_ = std::move(labels);

  g.adj_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.adj_offsets_[static_cast<std::size_t>(e.u) + 1];
    ++g.adj_offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (int i = 0; i < n; ++i)
    g.adj_offsets_[static_cast<std::size_t>(i) + 1] +=
        g.adj_offsets_[static_cast<std::size_t>(i)];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<int> cursor(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges_[static_cast<std::size_t>(e)];
    g.adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(ed.u)]++)] = {ed.v, e};
    g.adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(ed.v)]++)] = {ed.u, e};
  }
  return g;
}

std::span<const Neighbor> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
  const auto begin = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v)]);
  const auto end = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v) + 1]);
  return {adjacency_.data() + begin, end - begin};
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
  return adj_offsets_[static_cast<std::size_t>(v) + 1] -
         adj_offsets_[static_cast<std::size_t>(v)];
}

LoadResult load_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index_of;
  std::set<std::pair<int, int>> seen;
  int duplicates = 0;
  int self_loops = 0;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = index_of.emplace(token, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::string a, b, w, extra;
    if (!(tokens >> a)) continue;
    if (!(tokens >> b))
      throw ParseError("expected two vertex labels", line_no);
    if (tokens >> w) {
      char* end = nullptr;
      const double weight = std::strtod(w.c_str(), &end);
      if (end != w.c_str() + w.size() || !std::isfinite(weight))
        throw ParseError("third token must be a numeric weight", line_no);
      if (tokens >> extra)
        throw ParseError("too many tokens on edge line", line_no);
    }
    if (a == b) {
      // "x x" on a fresh label is a vertex declaration (the form
      // write_edge_list emits for isolated vertices); a repeat on a known
      // vertex is a genuine self-loop and is dropped with a count.
      if (index_of.contains(a)) ++self_loops;
      intern(a);
      continue;
    }
    const int u = intern(a);
    const int v = intern(b);
    const auto key = std::minmax(u, v);
    if (!seen.emplace(key.first, key.second).second) {
      ++duplicates;
      continue;
    }
    edges.push_back({key.first, key.second});
  }

  LoadResult result;
  const int n = static_cast<int>(labels.size());
  result.graph = Graph::from_edges(n, std::move(edges), std::move(labels));
  result.duplicate_edges_dropped = duplicates;
  result.self_loops_dropped = self_loops;
  return result;
}

void write_edge_list(const Graph& g, std::ostream& out,
                     const std::string& header_comment) {
  if (!header_comment.empty()) {
    std::istringstream lines(header_comment);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  const auto& labels = g.labels();
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);

  // A vertex's first appearance must happen in index order for the loader's
  // first-seen mapping to reproduce indices; declaration self-loops fill any
  // ordering gap the edge stream would leave.
  auto declare_below = [&](int limit, int skip) {
    for (int w = 0; w < limit; ++w) {
      if (!seen[static_cast<std::size_t>(w)] && w != skip) {
        out << labels[static_cast<std::size_t>(w)] << ' '
            << labels[static_cast<std::size_t>(w)] << '\n';
        seen[static_cast<std::size_t>(w)] = 1;
      }
    }
  };

  for (const auto& e : g.edges()) {
    if (!seen[static_cast<std::size_t>(e.u)]) {
      declare_below(e.u, -1);
      bool gap = false;
      for (int w = e.u + 1; w < e.v && !gap; ++w)
        gap = !seen[static_cast<std::size_t>(w)];
      if (gap) {
        out << labels[static_cast<std::size_t>(e.u)] << ' '
            << labels[static_cast<std::size_t>(e.u)] << '\n';
        seen[static_cast<std::size_t>(e.u)] = 1;
      }
    }
    if (!seen[static_cast<std::size_t>(e.v)]) declare_below(e.v, e.u);
    out << labels[static_cast<std::size_t>(e.u)] << ' '
        << labels[static_cast<std::size_t>(e.v)] << '\n';
    seen[static_cast<std::size_t>(e.u)] = 1;
    seen[static_cast<std::size_t>(e.v)] = 1;
  }
  declare_below(n, -1);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  RandomEngine eng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform_unit(eng) < p) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Eigen::MatrixXd graph_laplacian(const Graph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    L(e.u, e.u) += 1.0;
    L(e.v, e.v) += 1.0;
    L(e.u, e.v) -= 1.0;
    L(e.v, e.u) -= 1.0;
  }
  return L;
}

Graph delete_vertex(const Graph& g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    edges.push_back({e.u - (e.u > v ? 1 : 0), e.v - (e.v > v ? 1 : 0)});
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 0; i < n; ++i) {
    if (i != v) labels.push_back(g.labels()[static_cast<std::size_t>(i)]);
  }
  return Graph::from_edges(n - 1, std::move(edges), std::move(labels));
}

}  // namespace sheafcent
