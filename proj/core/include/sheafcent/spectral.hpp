// spectral.hpp — dense symmetric eigendecomposition, Laplacian energy, and
// heat-kernel diffusion distances.
#pragma once

#include <Eigen/Dense>

namespace sheafcent {

// eigenvalues ascending; eigenvectors orthonormal, column k paired with
// eigenvalue k.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

// Requires max-abs asymmetry <= 1e-10; the input is symmetrized as
// (M + M^T)/2 before decomposition. Throws NumericError on solver failure.
Spectrum eigh(const Eigen::MatrixXd& m);

enum class EnergyMethod { Eigen, Frobenius };

// Sum of squared eigenvalues; for symmetric matrices this equals the squared
// Frobenius norm, so both routes are exposed and must agree.
double laplacian_energy(const Eigen::MatrixXd& m,
                        EnergyMethod method = EnergyMethod::Frobenius);

// d_t^2(i,j) = sum_k exp(-2 lambda_k t) (phi_k(i) - phi_k(j))^2, t > 0.
double diffusion_distance_sq(const Spectrum& s, int i, int j, double t);

}  // namespace sheafcent
