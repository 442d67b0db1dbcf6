#ifndef USC_OPERATORS_HPP
#define USC_OPERATORS_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace usc {

using Index = Eigen::Index;

template <typename Real>
using ComplexMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using ComplexVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using ComplexMatrix = ComplexMatrixT<double>;
using ComplexVector = ComplexVectorT<double>;
using RealVector = Eigen::VectorXd;
using cplx = std::complex<double>;

/// Which factor of the qubit (x) cavity product space an operator acts on.
enum class Slot { qubit, cavity };

/// Composite Hilbert space of one two-level system and one truncated cavity mode.
///
/// Ordering is qubit (x) cavity with the qubit index varying slowest, so the
/// basis state |s, n> (s = 0 ground, s = 1 excited, n photons) sits at
/// s * n_fock + n. Every module shares this layout.
struct SpaceLayout {
  static constexpr Index qubit_dim = 2;
  Index n_fock = 10;

  Index total_dim() const { return qubit_dim * n_fock; }
  Index index(Index qubit_state, Index photons) const { return qubit_state * n_fock + photons; }
  Index slot_dim(Slot slot) const { return slot == Slot::qubit ? qubit_dim : n_fock; }
};

/// Truncated bosonic annihilation operator, <m|a|m+1> = sqrt(m+1).
template <typename Real = double>
ComplexMatrixT<Real> annihilation(Index n_fock) {
  if (n_fock < 2) {
    throw std::invalid_argument("annihilation: n_fock must be >= 2, got " + std::to_string(n_fock));
  }
  ComplexMatrixT<Real> a = ComplexMatrixT<Real>::Zero(n_fock, n_fock);
  for (Index m = 0; m + 1 < n_fock; ++m) {
    a(m, m + 1) = std::sqrt(static_cast<Real>(m + 1));
  }
  return a;
}

template <typename Real = double>
ComplexMatrixT<Real> number_operator(Index n_fock) {
  ComplexMatrixT<Real> n = ComplexMatrixT<Real>::Zero(n_fock, n_fock);
  for (Index m = 0; m < n_fock; ++m) n(m, m) = static_cast<Real>(m);
  return n;
}

template <typename Real = double>
struct PauliOps {
  ComplexMatrixT<Real> sigma_plus;
  ComplexMatrixT<Real> sigma_minus;
  ComplexMatrixT<Real> sigma_x;
  ComplexMatrixT<Real> sigma_z;
};

// Basis (ground, excited): sigma_minus = |g><e| = [[0,1],[0,0]].
template <typename Real = double>
PauliOps<Real> pauli_ops() {
  PauliOps<Real> p;
  p.sigma_minus = ComplexMatrixT<Real>::Zero(2, 2);
  p.sigma_minus(0, 1) = Real(1);
  p.sigma_plus = p.sigma_minus.adjoint();
  p.sigma_x = p.sigma_plus + p.sigma_minus;
  p.sigma_z = ComplexMatrixT<Real>::Zero(2, 2);
  p.sigma_z(0, 0) = Real(-1);
  p.sigma_z(1, 1) = Real(1);
  return p;
}

/// Kronecker product A (x) B; A's index varies slowest.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>
tensor(const Eigen::MatrixBase<DerivedA>& A, const Eigen::MatrixBase<DerivedB>& B) {
  using Scalar = typename DerivedA::Scalar;
  const Index ra = A.rows(), ca = A.cols(), rb = B.rows(), cb = B.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(ra * rb, ca * cb);
  for (Index i = 0; i < ra; ++i) {
    for (Index j = 0; j < ca; ++j) {
      out.block(i * rb, j * cb, rb, cb) = A(i, j) * B;
    }
  }
  return out;
}

/// Lift a single-subsystem operator onto the composite space.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
embed(const Eigen::MatrixBase<Derived>& op, Slot slot, const SpaceLayout& layout) {
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Index want = layout.slot_dim(slot);
  if (op.rows() != want || op.cols() != want) {
    throw std::invalid_argument("embed: operator is " + std::to_string(op.rows()) + "x" +
                                std::to_string(op.cols()) + " but slot dimension is " +
                                std::to_string(want));
  }
  if (slot == Slot::qubit) return tensor(op, Mat::Identity(layout.n_fock, layout.n_fock));
  return tensor(Mat::Identity(SpaceLayout::qubit_dim, SpaceLayout::qubit_dim), op);
}

template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>
commutator(const Eigen::MatrixBase<DerivedA>& A, const Eigen::MatrixBase<DerivedB>& B) {
  return A * B - B * A;
}

/// max_ij |M - M^dag|_ij
template <typename Derived>
auto hermiticity_defect(const Eigen::MatrixBase<Derived>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("hermiticity_defect: matrix not square");
  return (M - M.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace usc

#endif  // USC_OPERATORS_HPP
