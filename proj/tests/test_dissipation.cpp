#include "doctest.h"
#include "test_support.hpp"

#include "usc/dissipation.hpp"
#include "usc/dynamics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

using namespace usc;

namespace {

RabiParams resonant(double g, Index n_fock = 10) { return RabiParams{1.0, 1.0, g, n_fock}; }

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("thermal occupancy") {
  CHECK(thermal_occupancy(1.0, 0.0) == 0.0);
  CHECK(thermal_occupancy(1.0, 1.0 / std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
  // 1 / (e^9 - 1)
  CHECK(thermal_occupancy(0.9, 0.1) == doctest::Approx(1.2341e-4).epsilon(1e-4));
  CHECK(thermal_occupancy(1e-12, 0.1) == doctest::Approx(1e11).epsilon(1e-6));
  CHECK_THROWS_AS(thermal_occupancy(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(thermal_occupancy(-1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(thermal_occupancy(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("bath validation") {
  CHECK_NOTHROW(BathSpec{}.validate());
  CHECK_THROWS_AS((BathSpec{-1e-3, 5e-3, 0.1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BathSpec{5e-3, 5e-3, -0.1}.validate()), std::invalid_argument);
}

TEST_CASE("relaxation rates") {
  const BathSpec bath{5e-3, 5e-3, 0.1};

  SUBCASE("weak coupling recovers the bare cavity rate") {
    const RabiParams p = resonant(1e-6);
    const EigenSystem es = diagonalize(p);
    const TransitionTable tt = transition_table(es, p.layout());
    // The two one-excitation polaritons are half photon.
    const double total = relaxation_rate(Channel::cavity, 0, 1, tt, bath, 1.0) +
                         relaxation_rate(Channel::cavity, 0, 2, tt, bath, 1.0);
    CHECK(total == doctest::Approx(bath.gamma_a).epsilon(1e-5));
  }

  SUBCASE("forbidden pair has zero rate") {
    const RabiParams p = resonant(0.2);
    const TransitionTable tt = transition_table(diagonalize(p), p.layout());
    // |0> and |3> share parity
    CHECK(std::abs(tt.c_a(0, 3)) <= kSelectionTolerance);
    CHECK(relaxation_rate(Channel::cavity, 0, 3, tt, bath, 1.0) == 0.0);
    CHECK(relaxation_rate(Channel::emitter, 0, 3, tt, bath, 1.0) == 0.0);
    CHECK_THROWS_AS(relaxation_rate(Channel::cavity, 2, 1, tt, bath, 1.0), std::invalid_argument);
  }

  SUBCASE("rate matches an independent dense diagonalization") {
    const RabiParams p = resonant(0.2);
    const TransitionTable tt = transition_table(diagonalize(p), p.layout());

    // Reference: n_fock = 20, cavity fastest, built without library helpers.
    const Index n = 20;
    ComplexMatrix H = ComplexMatrix::Zero(2 * n, 2 * n);
    ComplexMatrix C = ComplexMatrix::Zero(2 * n, 2 * n);
    for (Index q = 0; q < 2; ++q) {
      for (Index m = 0; m < n; ++m) {
        H(q * n + m, q * n + m) = static_cast<double>(m) + static_cast<double>(q);
        if (m + 1 < n) {
          const double s = std::sqrt(static_cast<double>(m + 1));
          // g (a + a^dag) sigma_x couples (q, m+1) and (1-q, m)
          H(q * n + m, (1 - q) * n + m + 1) = 0.2 * s;
          H((1 - q) * n + m + 1, q * n + m) = 0.2 * s;
          // -i (a - a^dag)
          C(q * n + m, q * n + m + 1) = cplx(0.0, -s);
          C(q * n + m + 1, q * n + m) = cplx(0.0, s);
        }
      }
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(H);
    const ComplexMatrix Cd = ref.eigenvectors().adjoint() * C * ref.eigenvectors();
    for (Index k : {1, 2}) {
      const double delta = ref.eigenvalues()(k) - ref.eigenvalues()(0);
      const double expected = bath.gamma_a * delta * std::norm(Cd(0, k));
      CHECK(relaxation_rate(Channel::cavity, 0, k, tt, bath, 1.0) == doctest::Approx(expected).epsilon(1e-8));
    }
  }

  SUBCASE("custom spectral weight") {
    const RabiParams p = resonant(0.2);
    const TransitionTable tt = transition_table(diagonalize(p), p.layout());
    const SpectralWeight flat = [](Channel, double) { return 1.0; };
    CHECK(relaxation_rate(Channel::cavity, 0, 1, tt, flat) == doctest::Approx(std::norm(tt.c_a(0, 1))));
    const SpectralWeight negative = [](Channel, double) { return -1.0; };
    CHECK_THROWS_AS(relaxation_rate(Channel::cavity, 0, 1, tt, negative), std::logic_error);
  }
}

TEST_CASE("Lindblad term enumeration") {
  const RabiParams p = resonant(0.2, 6);
  const EigenSystem es = diagonalize(p);
  const TransitionTable tt = transition_table(es, p.layout());

  SUBCASE("counts, ordering and detailed balance") {
    const BathSpec bath{5e-3, 5e-3, 0.1};
    const auto terms = build_terms(tt, es, bath, 1.0);
    std::size_t allowed = 0;
    for (const auto& row : tt.rows()) {
      if (row.delta <= kZeroFrequency) continue;
      if (std::abs(row.c_a_jk) > kSelectionTolerance) ++allowed;
      if (std::abs(row.c_x_jk) > kSelectionTolerance) ++allowed;
    }
    CHECK(terms.size() == 2 * allowed);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
      const auto& down = terms[i];
      const auto& up = terms[i + 1];
      CHECK(down.direction == Direction::decay);
      CHECK(up.direction == Direction::excitation);
      CHECK(down.rate > 0.0);
      CHECK(up.rate >= 0.0);
      CHECK(down.j < down.k);
      // rate_up / rate_down = exp(-Delta / T)
      CHECK(up.rate / down.rate == doctest::Approx(std::exp(-down.delta / bath.temperature)).epsilon(1e-12));
      CHECK(max_abs(up.jump - down.jump.adjoint()) == 0.0);
    }
    CHECK(terms.front().channel == Channel::cavity);
    CHECK(terms.back().channel == Channel::emitter);
  }

  SUBCASE("zero temperature has no excitation") {
    const auto terms = build_terms(tt, es, BathSpec{5e-3, 5e-3, 0.0}, 1.0);
    for (const auto& t : terms) {
      if (t.direction == Direction::excitation) CHECK(t.rate == 0.0);
      if (t.direction == Direction::decay) CHECK(t.rate == t.base_rate);
    }
  }

  SUBCASE("ratio of excitation to decay at T = 0.2 for Delta = 0.9") {
    // Independent check of one ratio: e^{-4.5}
    const double nbar = thermal_occupancy(0.9, 0.2);
    CHECK(nbar / (1.0 + nbar) == doctest::Approx(std::exp(-4.5)).epsilon(1e-13));
  }
}

TEST_CASE("vectorization conventions") {
  std::mt19937 rng(3);
  const ComplexMatrix rho = testing::random_matrix(4, rng);
  CHECK(max_abs(unvectorize(vectorize(rho), 4) - rho) == 0.0);
  CHECK(vectorize(rho)(1) == rho(1, 0));
  CHECK_THROWS_AS(unvectorize(vectorize(rho), 3), std::invalid_argument);

  const ComplexMatrix A = testing::random_matrix(4, rng);
  const ComplexMatrix B = testing::random_matrix(4, rng);
  CHECK((left_right_superop(A, B) * vectorize(rho) - vectorize(A * rho * B)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Liouvillian of a closed system") {
  const RabiParams p = resonant(0.2, 4);
  const EigenSystem es = diagonalize(p);
  const Liouvillian L = build_liouvillian(build_hamiltonian(p), {});
  for (Index j = 0; j < es.size(); ++j) {
    for (Index k = 0; k < es.size(); ++k) {
      const ComplexMatrix op = es.states.col(j) * es.states.col(k).adjoint();
      const cplx lambda(0.0, -(es.energies(j) - es.energies(k)));
      CHECK((L.matrix * vectorize(op) - lambda * vectorize(op)).norm() < 1e-12);
    }
  }
}

TEST_CASE("amplitude damping of a two-level system") {
  ComplexMatrix H = ComplexMatrix::Zero(2, 2);
  H(1, 1) = 1.0;
  LindbladTerm t;
  t.rate = 0.3;
  t.jump = ComplexMatrix::Zero(2, 2);
  t.jump(0, 1) = 1.0;
  const Liouvillian L = build_liouvillian(H, {t});

  ComplexMatrix rho0 = ComplexMatrix::Constant(2, 2, 0.5);
  for (double time : {0.5, 2.0, 7.0}) {
    const ComplexVector v = testing::expm_taylor(time * L.matrix) * vectorize(rho0);
    const ComplexMatrix rho = unvectorize(v, 2);
    CHECK(rho(1, 1).real() == doctest::Approx(0.5 * std::exp(-0.3 * time)).epsilon(1e-12));
    CHECK(std::abs(rho(0, 1)) == doctest::Approx(0.5 * std::exp(-0.15 * time)).epsilon(1e-12));
    CHECK(std::abs(rho.trace() - 1.0) < 1e-13);
  }

  t.rate = -1.0;
  CHECK_THROWS_AS(build_liouvillian(H, {t}), std::invalid_argument);
}

TEST_CASE("Liouvillian agrees with the direct master-equation right-hand side") {
  std::mt19937 rng(5);
  for (double temperature : {0.0, 0.1, 0.2}) {
    CAPTURE(temperature);
    const OpenSystem sys = assemble(resonant(0.2, 5), BathSpec{5e-3, 5e-3, temperature});
    const Index d = sys.liouvillian.hilbert_dim();
    for (int trial = 0; trial < 3; ++trial) {
      const ComplexMatrix rho = testing::random_density(d, rng);
      const ComplexMatrix direct = testing::master_rhs(sys.hamiltonian, sys.liouvillian.terms, rho);
      const ComplexMatrix via_l = unvectorize(sys.liouvillian.matrix * vectorize(rho), d);
      CHECK(max_abs(direct - via_l) <= 1e-12);
    }
  }
}

TEST_CASE("structural properties of the dissipative generator") {
  std::mt19937 rng(9);
  for (double g : {0.0, 0.1, 0.2}) {
    for (double temperature : {0.0, 0.15}) {
      CAPTURE(g);
      CAPTURE(temperature);
      const OpenSystem sys = assemble(resonant(g, 6), BathSpec{5e-3, 5e-3, temperature});
      const Index d = sys.liouvillian.hilbert_dim();
      for (const auto& t : sys.liouvillian.terms) CHECK(t.rate >= 0.0);

      const ComplexMatrix X = testing::random_hermitian(d, rng);
      const ComplexMatrix out = unvectorize(sys.liouvillian.matrix * vectorize(X), d);
      CHECK(std::abs(out.trace()) <= 1e-12);
      CHECK(hermiticity_defect(out) <= 1e-12);

      // Trace functional is a left null vector.
      const ComplexVector id = vectorize(ComplexMatrix::Identity(d, d));
      CHECK((id.adjoint() * sys.liouvillian.matrix).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("spectrum of the generator is in the closed left half plane") {
  const OpenSystem sys = assemble(resonant(0.2, 4), BathSpec{5e-3, 5e-3, 0.15});
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(sys.liouvillian.matrix, false);
  CHECK(solver.eigenvalues().real().maxCoeff() <= 1e-9);
}

TEST_CASE("equal-temperature baths leave the Gibbs state stationary") {
  for (double temperature : {0.1, 0.2}) {
    const OpenSystem sys = assemble(resonant(0.2), BathSpec{5e-3, 5e-3, temperature});
    const DensityMatrix gibbs = gibbs_state(sys.hamiltonian, temperature);
    CHECK((sys.liouvillian.matrix * vectorize(gibbs.matrix)).norm() <= 1e-8);
  }
}

TEST_CASE("population dynamics match the bare master equation without coupling") {
  // Off resonance and g = 0 the dressed jumps are the individual rungs of a
  // and sigma-, so both generators act identically on diagonal states. The
  // ohmic weight scales the emitter rate by omegax / omega0.
  const RabiParams p{1.0, 1.3, 0.0, 5};
  const BathSpec bath{5e-3, 7e-3, 0.2};
  const OpenSystem sys = assemble(p, bath);
  const ComplexMatrix reference =
      testing::standard_master_equation(p, BathSpec{bath.gamma_a, bath.gamma_x * p.omegax, bath.temperature});
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Index d = sys.liouvillian.hilbert_dim();
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) rho(i, i) = u(rng);
  rho /= rho.trace();
  const ComplexVector lhs = sys.liouvillian.matrix * vectorize(rho);
  const ComplexVector rhs = reference * vectorize(rho);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-14);
}
