// sheaf.hpp — coboundary assembly and the sheaf Laplacian L = delta^T delta.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sheafcent/deception.hpp"
#include "sheafcent/graph.hpp"

namespace sheafcent {

// Block matrix sending vertex data to per-edge disagreements. Row block e
// spans [edge_offsets[e], edge_offsets[e+1]); column block v spans
// [vertex_offsets[v], vertex_offsets[v+1]).
struct CoboundaryMatrix {
  Eigen::MatrixXd matrix;
  std::vector<int> vertex_offsets;  // size n+1
  std::vector<int> edge_offsets;    // size m+1
};

// Symmetric positive-semidefinite by construction.
struct SheafLaplacian {
  Eigen::MatrixXd matrix;
  std::vector<int> vertex_offsets;
};

// Disclosure coboundary: row e=(u,v) holds +d_u at column u and -d_v at
// column v, where d_w = restriction_scalar(x_w, y_other, R_w, tau) and y is
// public_opinions(g, a). All stalks are 1-dimensional on this path.
CoboundaryMatrix build_coboundary(const Graph& g, const DeceptionAssignment& a);

// delta^T delta with the upper triangle computed once and mirrored, so the
// result is symmetric to the bit.
SheafLaplacian sheaf_laplacian(const CoboundaryMatrix& delta);

// One signed restriction map: block `map` (edge stalk dim x vertex stalk dim)
// placed with `sign` at (edge row block, vertex column block).
struct Incidence {
  int edge = 0;
  int vertex = 0;
  Eigen::MatrixXd map;
  int sign = 1;  // +1 or -1
};

// Generic sheaf assembly with arbitrary stalk dimensions. Every edge must
// carry exactly two incidences of opposite sign. Overlapping blocks add.
CoboundaryMatrix assemble_from_blocks(int n_vertices, int n_edges,
                                      const std::vector<int>& vertex_dims,
                                      const std::vector<int>& edge_dims,
                                      const std::vector<Incidence>& incidences);

// Frozen vertex deletion: drops v's column block and the row blocks of its
// incident edges; every surviving entry is kept as-is (public opinions are
// NOT recomputed on the subgraph).
CoboundaryMatrix restrict_to_subgraph(const CoboundaryMatrix& delta,
                                      const Graph& g, int v);

}  // namespace sheafcent
