#include "usc/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace usc {

double DensityMatrix::min_eigenvalue() const {
  const ComplexMatrix h = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical(double herm_tol, double trace_tol, double eig_tol) const {
  return hermiticity_defect(matrix) <= herm_tol && trace_defect() <= trace_tol && min_eigenvalue() >= -eig_tol;
}

double trace_distance(const ComplexMatrix& A, const ComplexMatrix& B) {
  const ComplexMatrix diff = A - B;
  const ComplexMatrix h = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

DensityMatrix gibbs_state(const ComplexMatrix& H, double temperature) {
  if (!(temperature >= 0.0)) throw std::invalid_argument("gibbs_state: temperature must be >= 0");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(H);
  const RealVector& e = solver.eigenvalues();
  RealVector w = RealVector::Zero(e.size());
  if (temperature == 0.0) {
    w(0) = 1.0;
  } else {
    w = (-(e.array() - e.minCoeff()) / temperature).exp();
    w /= w.sum();
  }
  return {solver.eigenvectors() * w.cast<cplx>().asDiagonal() * solver.eigenvectors().adjoint()};
}

DensityMatrix steady_state(const Liouvillian& L) {
  const Index d = L.hilbert_dim();
  const Index n = d * d;
  if (L.matrix.rows() != n || L.matrix.cols() != n) {
    throw std::invalid_argument("steady_state: Liouvillian dimension mismatch");
  }

  Eigen::ComplexEigenSolver<ComplexMatrix> spectrum(L.matrix, /*computeEigenvectors=*/false);
  std::vector<double> decay(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) decay[static_cast<std::size_t>(i)] = std::abs(spectrum.eigenvalues()(i).real());
  std::vector<double> sorted = decay;
  std::partial_sort(sorted.begin(), sorted.begin() + 2, sorted.end());
  if (sorted[1] <= 1e-9) {
    // Report how well the two slowest eigenvectors satisfy L v = 0.
    Eigen::ComplexEigenSolver<ComplexMatrix> full(L.matrix, true);
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::partial_sort(order.begin(), order.begin() + 2, order.end(), [&](Index a, Index b) {
      return std::abs(full.eigenvalues()(a)) < std::abs(full.eigenvalues()(b));
    });
    const double r0 = (L.matrix * full.eigenvectors().col(order[0])).norm();
    const double r1 = (L.matrix * full.eigenvectors().col(order[1])).norm();
    std::ostringstream msg;
    msg << "steady_state: null space of the Liouvillian is not unique (second slowest decay rate "
        << sorted[1] << " <= 1e-9; candidate residuals " << r0 << ", " << r1 << ")";
    throw SteadyStateError(msg.str(), r0, r1);
  }

  // Replace the first equation with the trace condition.
  ComplexMatrix M = L.matrix;
  ComplexVector rhs = ComplexVector::Zero(n);
  M.row(0).setZero();
  for (Index i = 0; i < d; ++i) M(0, i * d + i) = 1.0;
  rhs(0) = 1.0;
  const ComplexVector v = M.partialPivLu().solve(rhs);

  ComplexMatrix rho = unvectorize(v, d);
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace();

  const double residual = (L.matrix * vectorize(rho)).norm();
  if (residual > 1e-10 * std::max(1.0, L.matrix.cwiseAbs().maxCoeff())) {
    throw SteadyStateError("steady_state: residual " + std::to_string(residual) + " exceeds tolerance",
                           residual, residual);
  }
  return {rho};
}

}  // namespace usc
