#include "doctest.h"
#include "test_support.hpp"

#include "usc/operators.hpp"

#include <random>

using namespace usc;

TEST_CASE("annihilation operator has sqrt(m+1) on the superdiagonal") {
  const ComplexMatrix a2 = annihilation(2);
  CHECK(a2(0, 1) == cplx(1.0));
  CHECK(a2(0, 0) == cplx(0.0));
  CHECK(a2(1, 0) == cplx(0.0));
  CHECK(a2(1, 1) == cplx(0.0));

  const ComplexMatrix a3 = annihilation(3);
  CHECK(a3(0, 1) == cplx(1.0));
  CHECK(a3(1, 2) == cplx(std::sqrt(2.0)));
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      if (j != i + 1) CHECK(a3(i, j) == cplx(0.0));

  CHECK_THROWS_AS(annihilation(1), std::invalid_argument);
  CHECK_THROWS_AS(annihilation(0), std::invalid_argument);
}

TEST_CASE("a^dag a is diag(0..n-1) to rounding") {
  for (Index n = 2; n <= 12; ++n) {
    const ComplexMatrix a = annihilation(n);
    const ComplexMatrix num = a.adjoint() * a;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        // sqrt(m)^2 may differ from m in the last bit
        CHECK(std::abs(num(i, j) - (i == j ? cplx(static_cast<double>(i)) : cplx(0.0))) <= 4e-15 * n);
      }
    }
  }
}

TEST_CASE("single-precision operators share the construction") {
  const auto a = annihilation<float>(3);
  CHECK(a(1, 2).real() == doctest::Approx(std::sqrt(2.0f)));
}

TEST_CASE("Pauli algebra") {
  const auto p = pauli_ops();
  CHECK((p.sigma_x * p.sigma_x - ComplexMatrix::Identity(2, 2)).norm() == 0.0);
  CHECK(p.sigma_minus(0, 1) == cplx(1.0));
  CHECK((p.sigma_plus - p.sigma_minus.adjoint()).norm() == 0.0);
  CHECK((p.sigma_plus + p.sigma_minus - p.sigma_x).norm() == 0.0);
  const ComplexMatrix excited = p.sigma_plus * p.sigma_minus;
  CHECK(excited(1, 1) == cplx(1.0));
  CHECK(excited(0, 0) == cplx(0.0));
  CHECK((excited * excited - excited).norm() == 0.0);
}

TEST_CASE("tensor product") {
  CHECK((tensor(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)) - ComplexMatrix::Identity(6, 6))
            .norm() == 0.0);

  const ComplexMatrix sx_i = tensor(pauli_ops().sigma_x, ComplexMatrix::Identity(2, 2));
  // ((qubit 0, photon 0), (qubit 1, photon 0))
  CHECK(sx_i(0, 2) == cplx(1.0));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix A = testing::random_matrix(2, rng);
    const ComplexMatrix B = testing::random_matrix(2, rng);
    const ComplexMatrix C = testing::random_matrix(3, rng);
    // trace(A (x) B) = sum_i sum_j A_ii B_jj, multiplied out by hand
    const cplx expected = (A(0, 0) + A(1, 1)) * (B(0, 0) + B(1, 1));
    CHECK(std::abs(tensor(A, B).trace() - expected) < 1e-12);
    const ComplexMatrix left = tensor(tensor(A, B), C);
    const ComplexMatrix right = tensor(A, tensor(B, C));
    CHECK((left - right).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("embedding respects the qubit-slowest layout") {
  const SpaceLayout layout{4};
  CHECK(layout.total_dim() == 8);
  CHECK(layout.index(1, 2) == 6);

  const ComplexMatrix sz = embed(pauli_ops().sigma_z, Slot::qubit, layout);
  const ComplexMatrix n = embed(number_operator(4), Slot::cavity, layout);
  CHECK(commutator(sz, n).norm() == 0.0);

  CHECK((embed(ComplexMatrix::Identity(2, 2), Slot::qubit, layout) - ComplexMatrix::Identity(8, 8)).norm() == 0.0);
  CHECK((embed(ComplexMatrix::Identity(4, 4), Slot::cavity, layout) - ComplexMatrix::Identity(8, 8)).norm() == 0.0);

  CHECK_THROWS_AS(embed(ComplexMatrix::Identity(3, 3), Slot::qubit, layout), std::invalid_argument);
  CHECK_THROWS_AS(embed(ComplexMatrix::Identity(2, 2), Slot::cavity, layout), std::invalid_argument);
}

TEST_CASE("operators on disjoint slots commute exactly") {
  std::mt19937 rng(11);
  const SpaceLayout layout{5};
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix A = embed(testing::random_matrix(2, rng), Slot::qubit, layout);
    const ComplexMatrix B = embed(testing::random_matrix(5, rng), Slot::cavity, layout);
    // Each product entry is a single nonzero product, so equality is exact.
    CHECK((A * B - B * A).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("canonical commutator deviates only on the top Fock level") {
  const SpaceLayout layout{6};
  const ComplexMatrix a = embed(annihilation(6), Slot::cavity, layout);
  const ComplexMatrix c = commutator(a, ComplexMatrix(a.adjoint()));
  for (Index q = 0; q < 2; ++q) {
    for (Index m = 0; m < 6; ++m) {
      const Index i = layout.index(q, m);
      const double expected = (m == 5) ? -5.0 : 1.0;
      CHECK(std::abs(c(i, i) - expected) < 1e-14);
    }
  }
  CHECK((c - ComplexMatrix(c.diagonal().asDiagonal())).norm() == 0.0);
}

TEST_CASE("hermiticity defect") {
  const ComplexMatrix a = annihilation(3);
  CHECK(hermiticity_defect(ComplexMatrix(a + a.adjoint())) == 0.0);
  CHECK(hermiticity_defect(a) == doctest::Approx(std::sqrt(2.0)));
}
