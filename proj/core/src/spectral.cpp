#include "sheafcent/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "sheafcent/errors.hpp"

namespace sheafcent {

Spectrum eigh(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix must be square");
  if (m.size() == 0) return {Eigen::VectorXd(0), Eigen::MatrixXd(0, 0)};
  if (!m.allFinite())
    throw std::invalid_argument("matrix entries must be finite");
  const double asymmetry = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-10)
    throw std::invalid_argument("matrix is not symmetric (max asymmetry " +
                                std::to_string(asymmetry) + ")");
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success)
    throw NumericError("symmetric eigendecomposition failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double laplacian_energy(const Eigen::MatrixXd& m, EnergyMethod method) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix must be square");
  if (!m.allFinite())
    throw std::invalid_argument("matrix entries must be finite");
  if (m.size() > 0) {
    const double asymmetry = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asymmetry > 1e-10)
      throw std::invalid_argument("matrix is not symmetric (max asymmetry " +
                                  std::to_string(asymmetry) + ")");
  }
  if (method == EnergyMethod::Frobenius) return m.squaredNorm();
  return eigh(m).eigenvalues.squaredNorm();
}

double diffusion_distance_sq(const Spectrum& s, int i, int j, double t) {
  const Eigen::Index n = s.eigenvalues.size();
  if (s.eigenvectors.rows() != n || s.eigenvectors.cols() != n)
    throw std::invalid_argument("spectrum shape mismatch");
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::invalid_argument("vertex index out of range");
  if (!(t > 0.0)) throw std::invalid_argument("diffusion time must be > 0");
  double sum = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double diff = s.eigenvectors(i, k) - s.eigenvectors(j, k);
    sum += std::exp(-2.0 * s.eigenvalues[k] * t) * diff * diff;
  }
  return sum;
}

}  // namespace sheafcent
