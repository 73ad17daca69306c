#include "sheafcent/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sheafcent/errors.hpp"

namespace sheafcent {

namespace {

double require_positive_energy(double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy))
    throw DegenerateEnergyError(
        "total Laplacian energy is zero; centrality is undefined on an "
        "edgeless structure");
  return energy;
}

}  // namespace

CentralityVector laplacian_centrality(const Graph& g) {
  const int n = g.vertex_count();
  const double total =
      require_positive_energy(laplacian_energy(graph_laplacian(g)));
  Eigen::VectorXd scores(n);
  for (int v = 0; v < n; ++v) {
    const double deleted = laplacian_energy(graph_laplacian(delete_vertex(g, v)));
    scores[v] = (total - deleted) / total;
  }
  return {std::move(scores), CentralityKind::LaplacianEnergy,
          CentralitySource::GraphLaplacian};
}

CentralityVector laplacian_centrality(const Graph& g,
                                      const CoboundaryMatrix& delta) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (static_cast<int>(delta.vertex_offsets.size()) != n + 1 ||
      static_cast<int>(delta.edge_offsets.size()) != m + 1 ||
      delta.vertex_offsets.back() != n || delta.edge_offsets.back() != m)
    throw std::invalid_argument(
        "incremental path requires 1-dimensional stalks matching the graph");

  const Eigen::MatrixXd L = sheaf_laplacian(delta).matrix;
  const double total = require_positive_energy(L.squaredNorm());

  // Frozen deletion zeroes row/column v and lowers each neighbor j's diagonal
  // by its own squared disclosure into the removed edge; everything else is
  // untouched, so the energy drop is the sum of exactly those squared terms.
  Eigen::VectorXd scores(n);
  for (int v = 0; v < n; ++v) {
    double drop = 2.0 * L.row(v).squaredNorm() - L(v, v) * L(v, v);
    for (const auto& nb : g.neighbors(v)) {
      const double diag = L(nb.vertex, nb.vertex);
      const double d = delta.matrix(nb.edge, nb.vertex);
      const double reduced = diag - d * d;
      drop += diag * diag - reduced * reduced;
    }
    scores[v] = drop / total;
  }
  return {std::move(scores), CentralityKind::LaplacianEnergy,
          CentralitySource::SheafLaplacian};
}

CentralityVector laplacian_centrality_rebuild(const Graph& g,
                                              const DeceptionAssignment& a) {
  const int n = g.vertex_count();
  const CoboundaryMatrix delta = build_coboundary(g, a);
  const double total =
      require_positive_energy(sheaf_laplacian(delta).matrix.squaredNorm());
  Eigen::VectorXd scores(n);
  for (int v = 0; v < n; ++v) {
    const Graph sub = delete_vertex(g, v);
    DeceptionAssignment sub_a;
    sub_a.tau = a.tau;
    sub_a.opinions.resize(n - 1);
    sub_a.relations.reserve(static_cast<std::size_t>(n) - 1);
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      const int idx = w - (w > v ? 1 : 0);
      sub_a.opinions[idx] = a.opinions[w];
      sub_a.relations.push_back(a.relations[static_cast<std::size_t>(w)]);
    }
    const double deleted =
        sheaf_laplacian(build_coboundary(sub, sub_a)).matrix.squaredNorm();
    scores[v] = (total - deleted) / total;
  }
  return {std::move(scores), CentralityKind::LaplacianEnergy,
          CentralitySource::SheafLaplacian};
}

Eigen::VectorXd uniform_distribution(int n) {
  if (n < 1)
    throw std::invalid_argument(
        "a probability distribution needs at least one vertex");
  return Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
}

Eigen::VectorXd degree_distribution(const Graph& g) {
  const int m = g.edge_count();
  if (m == 0)
    throw DegenerateEnergyError(
        "degree distribution is undefined on an edgeless graph");
  Eigen::VectorXd dist(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    dist[v] = static_cast<double>(g.degree(v)) / (2.0 * m);
  return dist;
}

CentralityVector dff_centrality(const Spectrum& spectrum,
                                const Eigen::VectorXd& distribution, double t,
                                CentralitySource source) {
  const Eigen::Index n = spectrum.eigenvalues.size();
  if (spectrum.eigenvectors.rows() != n || spectrum.eigenvectors.cols() != n)
    throw std::invalid_argument("spectrum shape mismatch");
  if (distribution.size() != n)
    throw std::invalid_argument("distribution length mismatch");
  if (!(t > 0.0)) throw std::invalid_argument("diffusion time must be > 0");
  if ((distribution.array() < 0.0).any())
    throw std::invalid_argument("distribution entries must be >= 0");
  if (n > 0 && std::abs(distribution.sum() - 1.0) > 1e-10)
    throw std::invalid_argument("distribution must sum to 1");

  // Expanding the squared distance d_t^2(i,j) = q_i + q_j - 2 s_ij with
  //   q_i = sum_k g_k phi_k(i)^2,   s_ij = sum_k g_k phi_k(i) phi_k(j),
  // turns the naive O(n^3) double sum into O(n^2) matrix-vector work.
  const Eigen::ArrayXd decay = (-2.0 * t * spectrum.eigenvalues.array()).exp();
  const Eigen::MatrixXd& phi = spectrum.eigenvectors;
  const Eigen::VectorXd q =
      (phi.array().square().rowwise() * decay.transpose()).rowwise().sum().matrix();
  const Eigen::VectorXd mu = phi.transpose() * distribution;
  const Eigen::VectorXd cross = phi * (decay * mu.array()).matrix();
  const double c = q.dot(distribution);

  Eigen::VectorXd scores =
      (q.array() + c - 2.0 * cross.array()).cwiseMax(0.0).matrix();
  return {std::move(scores), CentralityKind::Dff, source};
}

std::vector<int> rank_vertices(const CentralityVector& c) {
  std::vector<int> order(static_cast<std::size_t>(c.scores.size()));
  std::iota(order.begin(), order.end(), 0);
  const bool ascending = c.kind == CentralityKind::Dff;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (c.scores[a] != c.scores[b])
      return ascending ? c.scores[a] < c.scores[b] : c.scores[a] > c.scores[b];
    return a < b;
  });
  return order;
}

}  // namespace sheafcent
