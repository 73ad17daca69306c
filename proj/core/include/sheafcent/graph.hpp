// graph.hpp — immutable undirected simple graph with dense 0-based ids.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sheafcent/errors.hpp"

namespace sheafcent {

// Stored with u < v; orientation is fixed at construction so downstream
// row layouts are deterministic.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  int vertex = 0;  // adjacent vertex
  int edge = 0;    // index into edges() of the connecting edge
  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Invariants: no self-loops, no duplicate undirected edges, endpoints < n,
// one label per vertex (unique, whitespace-free).
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on any invariant violation. Edges are
  // normalized to u < v but keep their given order. Empty labels means
  // decimal index labels.
  static Graph from_edges(int n, std::vector<Edge> edges,
                          std::vector<std::string> labels = {});

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Neighbors in incident-edge order (deterministic).
  std::span<const Neighbor> neighbors(int v) const;
  int degree(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<Neighbor> adjacency_;  // CSR payload
  std::vector<int> adj_offsets_;     // size n_+1
};

struct LoadResult {
  Graph graph;
  int duplicate_edges_dropped = 0;
  int self_loops_dropped = 0;
};

// Text format: lines "u v" or "u v w" (w numeric, ignored); '#' starts a
// comment; blank lines skipped; labels are arbitrary non-whitespace tokens
// mapped to dense indices in first-seen order. A self-loop line "x x" on a
// fresh label declares the vertex; on an already-known vertex it is dropped
// and counted.
LoadResult load_edge_list(std::istream& in);

// Inverse of load_edge_list: emits declaration self-loops exactly where
// needed so that reloading reproduces the graph (vertex order, labels,
// isolated vertices) byte-faithfully.
void write_edge_list(const Graph& g, std::ostream& out,
                     const std::string& header_comment = {});

// G(n, p): each unordered pair independently with probability p,
// deterministic for a fixed seed.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

// L = D - A with unit weights; exact integer arithmetic in doubles.
Eigen::MatrixXd graph_laplacian(const Graph& g);

// Removes v and its incident edges; indices above v shift down by one.
Graph delete_vertex(const Graph& g, int v);

}  // namespace sheafcent
