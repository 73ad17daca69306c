// centrality.hpp — energy-drop and diffusion-distance influence scores over
// either the graph Laplacian or the disclosure sheaf Laplacian.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sheafcent/graph.hpp"
#include "sheafcent/sheaf.hpp"
#include "sheafcent/spectral.hpp"

namespace sheafcent {

enum class CentralityKind { LaplacianEnergy, Dff };
enum class CentralitySource { GraphLaplacian, SheafLaplacian };

struct CentralityVector {
  Eigen::VectorXd scores;
  CentralityKind kind = CentralityKind::LaplacianEnergy;
  CentralitySource source = CentralitySource::GraphLaplacian;
};

// Normalized energy drop (E - E_v)/E of deleting each vertex, where E_v is
// the energy of the vertex-deleted structure. Graph path: rebuild D - A on
// the subgraph. Requires at least one edge.
CentralityVector laplacian_centrality(const Graph& g);

// Sheaf path with frozen deletion semantics, computed by an incremental
// Frobenius update that subtracts exactly the squared entries removed or
// changed by the deletion. Requires 1-dimensional stalks.
CentralityVector laplacian_centrality(const Graph& g,
                                      const CoboundaryMatrix& delta);

// Sheaf path with rebuild semantics: public opinions are recomputed on each
// vertex-deleted subgraph before assembling its coboundary.
CentralityVector laplacian_centrality_rebuild(const Graph& g,
                                              const DeceptionAssignment& a);

Eigen::VectorXd uniform_distribution(int n);

// deg(v) / 2m; requires at least one edge.
Eigen::VectorXd degree_distribution(const Graph& g);

// score_i = sum_j d_t^2(i,j) * distribution_j; smaller = more influential.
// distribution must be nonnegative and sum to 1 within 1e-10.
CentralityVector dff_centrality(const Spectrum& spectrum,
                                const Eigen::VectorXd& distribution, double t,
                                CentralitySource source);

// Most to least influential: descending scores for LaplacianEnergy,
// ascending for Dff; ties broken by vertex index.
std::vector<int> rank_vertices(const CentralityVector& c);

}  // namespace sheafcent
