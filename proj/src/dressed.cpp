#include "usc/dressed.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace usc {

void RabiParams::validate() const {
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw std::invalid_argument("model.omega0: must be a finite positive frequency");
  }
  if (!(omegax > 0.0) || !std::isfinite(omegax)) {
    throw std::invalid_argument("model.omegax: must be a finite positive frequency");
  }
  if (!(g >= 0.0) || !std::isfinite(g)) {
    throw std::invalid_argument("model.g: must be finite and >= 0");
  }
  if (n_fock < 2) {
    throw std::invalid_argument("model.n_fock: must be >= 2");
  }
}

ComplexMatrix build_hamiltonian(const RabiParams& p) {
  p.validate();
  const SpaceLayout layout = p.layout();
  const auto pauli = pauli_ops();
  const ComplexMatrix a = embed(annihilation(p.n_fock), Slot::cavity, layout);
  const ComplexMatrix n = embed(number_operator(p.n_fock), Slot::cavity, layout);
  const ComplexMatrix sx = embed(pauli.sigma_x, Slot::qubit, layout);
  const ComplexMatrix ee = embed(pauli.sigma_plus * pauli.sigma_minus, Slot::qubit, layout);

  ComplexMatrix H = p.omega0 * n + p.omegax * ee + p.g * (a + a.adjoint()) * sx;
  // (a + a^dag) and sigma_x commute, so the product is Hermitian up to rounding.
  return 0.5 * (H + H.adjoint());
}

namespace {

bool lex_less(const ComplexVector& u, const ComplexVector& v) {
  for (Index i = 0; i < u.size(); ++i) {
    if (u(i).real() != v(i).real()) return u(i).real() < v(i).real();
    if (u(i).imag() != v(i).imag()) return u(i).imag() < v(i).imag();
  }
  return false;
}

void fix_phase(Eigen::Ref<ComplexVector> v) {
  const double vmax = v.cwiseAbs().maxCoeff();
  if (vmax == 0.0) return;
  Index pick = 0;
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= vmax * (1.0 - 1e-10)) {
      pick = i;
      break;
    }
  }
  v *= std::abs(v(pick)) / v(pick);
}

// Rotate a degenerate cluster so it diagonalizes `tie` within the cluster,
// ordering by ascending expectation value.
void resolve_cluster(ComplexMatrix& states, Index begin, Index count, const ComplexMatrix* tie) {
  if (count < 2) return;
  ComplexMatrix block = states.middleCols(begin, count);
  if (tie != nullptr) {
    ComplexMatrix restricted = block.adjoint() * (*tie) * block;
    restricted = 0.5 * (restricted + restricted.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> sub(restricted);
    block = block * sub.eigenvectors();
  }
  for (Index c = 0; c < count; ++c) fix_phase(block.col(c));

  std::vector<Index> order(static_cast<std::size_t>(count));
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<double> expect(order.size(), 0.0);
  if (tie != nullptr) {
    for (Index c = 0; c < count; ++c) {
      expect[static_cast<std::size_t>(c)] = (block.col(c).adjoint() * (*tie) * block.col(c))(0, 0).real();
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](Index l, Index r) {
    const double el = expect[static_cast<std::size_t>(l)];
    const double er = expect[static_cast<std::size_t>(r)];
    if (std::abs(el - er) > 1e-9) return el < er;
    return lex_less(block.col(l), block.col(r));
  });
  for (Index c = 0; c < count; ++c) {
    states.col(begin + c) = block.col(order[static_cast<std::size_t>(c)]);
  }
}

EigenSystem diagonalize_impl(const ComplexMatrix& H, const ComplexMatrix* tie) {
  if (H.rows() != H.cols() || H.rows() == 0) {
    throw std::invalid_argument("diagonalize: matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  if (hermiticity_defect(H) > 1e-12 * scale) {
    throw std::invalid_argument("diagonalize: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(H);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("diagonalize: eigensolver did not converge");
  }
  EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};

  const Index n = es.size();
  const double tol = 1e-12 * std::max(1.0, es.energies.cwiseAbs().maxCoeff());
  Index begin = 0;
  while (begin < n) {
    Index end = begin + 1;
    while (end < n && es.energies(end) - es.energies(end - 1) <= tol) ++end;
    if (end - begin > 1) {
      resolve_cluster(es.states, begin, end - begin, tie);
    } else {
      fix_phase(es.states.col(begin));
    }
    begin = end;
  }
  return es;
}

}  // namespace

EigenSystem diagonalize(const ComplexMatrix& H) { return diagonalize_impl(H, nullptr); }

EigenSystem diagonalize(const ComplexMatrix& H, const ComplexMatrix& tie_breaker) {
  return diagonalize_impl(H, &tie_breaker);
}

EigenSystem diagonalize(const RabiParams& p) {
  const auto pauli = pauli_ops();
  const ComplexMatrix excited = embed(pauli.sigma_plus * pauli.sigma_minus, Slot::qubit, p.layout());
  return diagonalize(build_hamiltonian(p), excited);
}

std::vector<LadderRow> energy_ladder(const RabiParams& base, const std::vector<double>& g_values) {
  std::vector<LadderRow> out;
  out.reserve(g_values.size());
  for (double g : g_values) {
    if (!std::isfinite(g) || g < 0.0) {
      throw std::invalid_argument("energy_ladder: coupling values must be finite and >= 0");
    }
    RabiParams p = base;
    p.g = g;
    out.push_back({g, diagonalize(p).energies});
  }
  return out;
}

ComplexMatrix x_operator(const SpaceLayout& layout) {
  const ComplexMatrix a = embed(annihilation(layout.n_fock), Slot::cavity, layout);
  return cplx(0.0, -1.0) * (a - a.adjoint());
}

ComplexMatrix parity_operator(const SpaceLayout& layout) {
  ComplexMatrix cavity_parity = ComplexMatrix::Zero(layout.n_fock, layout.n_fock);
  for (Index m = 0; m < layout.n_fock; ++m) cavity_parity(m, m) = (m % 2 == 0) ? 1.0 : -1.0;
  return tensor(pauli_ops().sigma_z, cavity_parity);
}

TransitionRow TransitionTable::row(Index j, Index k) const {
  return {j, k, delta(j, k), x(j, k), c_a(j, k), c_x(j, k)};
}

std::vector<TransitionRow> TransitionTable::rows() const {
  std::vector<TransitionRow> out;
  const Index n = size();
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (Index j = 0; j < n; ++j) {
    for (Index k = j + 1; k < n; ++k) out.push_back(row(j, k));
  }
  return out;
}

TransitionTable transition_table(const EigenSystem& es, const SpaceLayout& layout) {
  if (es.states.rows() != layout.total_dim()) {
    throw std::invalid_argument("transition_table: eigensystem does not match layout");
  }
  const ComplexMatrix a = embed(annihilation(layout.n_fock), Slot::cavity, layout);
  const ComplexMatrix sm = embed(pauli_ops().sigma_minus, Slot::qubit, layout);
  const cplx minus_i(0.0, -1.0);

  TransitionTable tt;
  tt.energies = es.energies;
  tt.x = es.to_dressed(x_operator(layout));
  tt.c_a = es.to_dressed(minus_i * (a - a.adjoint()));
  tt.c_x = es.to_dressed(minus_i * (sm - sm.adjoint()));
  return tt;
}

ComplexMatrix xdot_plus_dressed(const TransitionTable& tt) {
  const Index n = tt.size();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index k = j + 1; k < n; ++k) {
      const double d = tt.delta(j, k);
      if (d <= kZeroFrequency) continue;
      out(j, k) = cplx(0.0, -d) * tt.x(j, k);
    }
  }
  return out;
}

ComplexMatrix xdot_plus(const EigenSystem& es, const TransitionTable& tt) {
  return es.to_bare(xdot_plus_dressed(tt));
}

TruncationReport check_truncation(const RabiParams& p, double tolerance) {
  constexpr Index kLevels = 6;
  RabiParams bigger = p;
  bigger.n_fock = p.n_fock + 5;
  const RealVector e_small = diagonalize(p).energies;
  const RealVector e_big = diagonalize(bigger).energies;

  TruncationReport r;
  r.n_fock = p.n_fock;
  r.n_reference = bigger.n_fock;
  r.tolerance = tolerance;
  const Index levels = std::min<Index>(kLevels, e_small.size());
  for (Index j = 0; j < levels; ++j) {
    const double shift = std::abs(e_small(j) - e_big(j)) / std::max(std::abs(e_big(j)), p.omega0);
    r.max_relative_shift = std::max(r.max_relative_shift, shift);
  }
  r.converged = r.max_relative_shift <= tolerance;
  return r;
}

}  // namespace usc
