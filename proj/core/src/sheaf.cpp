#include "sheafcent/sheaf.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sheafcent {

namespace {

std::vector<int> unit_offsets(int count) {
  std::vector<int> offsets(static_cast<std::size_t>(count) + 1);
  std::iota(offsets.begin(), offsets.end(), 0);
  return offsets;
}

std::vector<int> offsets_from_dims(const std::vector<int>& dims) {
  std::vector<int> offsets(dims.size() + 1, 0);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1) throw std::invalid_argument("stalk dimension must be >= 1");
    offsets[i + 1] = offsets[i] + dims[i];
  }
  return offsets;
}

}  // namespace

CoboundaryMatrix build_coboundary(const Graph& g, const DeceptionAssignment& a) {
  validate_assignment(g, a);
  const Eigen::VectorXd y = public_opinions(g, a);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  CoboundaryMatrix delta;
  delta.matrix = Eigen::MatrixXd::Zero(m, n);
  delta.vertex_offsets = unit_offsets(n);
  delta.edge_offsets = unit_offsets(m);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
    delta.matrix(e, ed.u) = restriction_scalar(
        a.opinions[ed.u], y[ed.v], a.relations[static_cast<std::size_t>(ed.u)],
        a.tau);
    delta.matrix(e, ed.v) = -restriction_scalar(
        a.opinions[ed.v], y[ed.u], a.relations[static_cast<std::size_t>(ed.v)],
        a.tau);
  }
  return delta;
}

SheafLaplacian sheaf_laplacian(const CoboundaryMatrix& delta) {
  const Eigen::Index n = delta.matrix.cols();
  SheafLaplacian lap;
  lap.matrix = Eigen::MatrixXd::Zero(n, n);
  lap.matrix.selfadjointView<Eigen::Upper>().rankUpdate(delta.matrix.transpose());
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j + 1; i < n; ++i) lap.matrix(i, j) = lap.matrix(j, i);
  }
  lap.vertex_offsets = delta.vertex_offsets;
  return lap;
}

CoboundaryMatrix assemble_from_blocks(int n_vertices, int n_edges,
                                      const std::vector<int>& vertex_dims,
                                      const std::vector<int>& edge_dims,
                                      const std::vector<Incidence>& incidences) {
  if (n_vertices < 0 || n_edges < 0)
    throw std::invalid_argument("counts must be >= 0");
  if (static_cast<int>(vertex_dims.size()) != n_vertices ||
      static_cast<int>(edge_dims.size()) != n_edges)
    throw std::invalid_argument("stalk dimension count mismatch");

  CoboundaryMatrix delta;
  delta.vertex_offsets = offsets_from_dims(vertex_dims);
  delta.edge_offsets = offsets_from_dims(edge_dims);
  delta.matrix = Eigen::MatrixXd::Zero(delta.edge_offsets.back(),
                                       delta.vertex_offsets.back());

  std::vector<int> incidence_count(static_cast<std::size_t>(n_edges), 0);
  std::vector<int> sign_sum(static_cast<std::size_t>(n_edges), 0);
  for (const auto& inc : incidences) {
    if (inc.edge < 0 || inc.edge >= n_edges)
      throw std::invalid_argument("incidence edge index out of range");
    if (inc.vertex < 0 || inc.vertex >= n_vertices)
      throw std::invalid_argument("incidence vertex index out of range");
    if (inc.sign != 1 && inc.sign != -1)
      throw std::invalid_argument("incidence sign must be +1 or -1");
    const int edge_dim = edge_dims[static_cast<std::size_t>(inc.edge)];
    const int vertex_dim = vertex_dims[static_cast<std::size_t>(inc.vertex)];
    if (inc.map.rows() != edge_dim || inc.map.cols() != vertex_dim)
      throw std::invalid_argument(
          "restriction map shape must be (edge stalk dim x vertex stalk dim)");
    ++incidence_count[static_cast<std::size_t>(inc.edge)];
    sign_sum[static_cast<std::size_t>(inc.edge)] += inc.sign;
    delta.matrix.block(delta.edge_offsets[static_cast<std::size_t>(inc.edge)],
                       delta.vertex_offsets[static_cast<std::size_t>(inc.vertex)],
                       edge_dim, vertex_dim) +=
        static_cast<double>(inc.sign) * inc.map;
  }
  for (int e = 0; e < n_edges; ++e) {
    if (incidence_count[static_cast<std::size_t>(e)] != 2 ||
        sign_sum[static_cast<std::size_t>(e)] != 0)
      throw std::invalid_argument(
          "edge " + std::to_string(e) +
          " must have exactly two incidences of opposite sign");
  }
  return delta;
}

CoboundaryMatrix restrict_to_subgraph(const CoboundaryMatrix& delta,
                                      const Graph& g, int v) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
  if (static_cast<int>(delta.vertex_offsets.size()) != n + 1 ||
      static_cast<int>(delta.edge_offsets.size()) != m + 1)
    throw std::invalid_argument("coboundary block structure does not match graph");

  std::vector<char> drop_edge(static_cast<std::size_t>(m), 0);
  for (const auto& nb : g.neighbors(v))
    drop_edge[static_cast<std::size_t>(nb.edge)] = 1;

  CoboundaryMatrix out;
  out.vertex_offsets.reserve(static_cast<std::size_t>(n));
  out.edge_offsets.reserve(static_cast<std::size_t>(m) + 1);

  std::vector<int> keep_cols;
  out.vertex_offsets.push_back(0);
  for (int w = 0; w < n; ++w) {
    if (w == v) continue;
    for (int c = delta.vertex_offsets[static_cast<std::size_t>(w)];
         c < delta.vertex_offsets[static_cast<std::size_t>(w) + 1]; ++c)
      keep_cols.push_back(c);
    out.vertex_offsets.push_back(static_cast<int>(keep_cols.size()));
  }

  std::vector<int> keep_rows;
  out.edge_offsets.push_back(0);
  for (int e = 0; e < m; ++e) {
    if (drop_edge[static_cast<std::size_t>(e)]) continue;
    for (int r = delta.edge_offsets[static_cast<std::size_t>(e)];
         r < delta.edge_offsets[static_cast<std::size_t>(e) + 1]; ++r)
      keep_rows.push_back(r);
    out.edge_offsets.push_back(static_cast<int>(keep_rows.size()));
  }

  out.matrix.resize(static_cast<Eigen::Index>(keep_rows.size()),
                    static_cast<Eigen::Index>(keep_cols.size()));
  for (std::size_t r = 0; r < keep_rows.size(); ++r) {
    for (std::size_t c = 0; c < keep_cols.size(); ++c)
      out.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          delta.matrix(keep_rows[r], keep_cols[c]);
  }
  return out;
}

}  // namespace sheafcent
