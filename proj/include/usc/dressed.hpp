#ifndef USC_DRESSED_HPP
#define USC_DRESSED_HPP

#include "usc/operators.hpp"

#include <vector>

namespace usc {

/// Closed-system parameters of the Rabi model, all frequencies in units of
/// the cavity frequency (hbar = k_B = 1).
struct RabiParams {
  double omega0 = 1.0;
  double omegax = 1.0;
  double g = 0.0;
  Index n_fock = 10;

  void validate() const;
  SpaceLayout layout() const { return SpaceLayout{n_fock}; }
  bool operator==(const RabiParams&) const = default;
};

/// Dressed eigenbasis: energies ascending, states as columns.
///
/// Degenerate clusters are ordered by ascending <sigma+ sigma-> and then by
/// lexicographic comparison of components. Each column's largest-magnitude
/// component is real positive.
struct EigenSystem {
  RealVector energies;
  ComplexMatrix states;

  Index size() const { return energies.size(); }
  /// omega_k - omega_j
  double gap(Index j, Index k) const { return energies(k) - energies(j); }
  /// Operator expressed in the dressed basis: V^dag op V.
  ComplexMatrix to_dressed(const ComplexMatrix& op) const { return states.adjoint() * op * states; }
  ComplexMatrix to_bare(const ComplexMatrix& op) const { return states * op * states.adjoint(); }
};

/// One (j, k > j) entry of the transition table.
struct TransitionRow {
  Index j = 0;
  Index k = 0;
  double delta = 0.0;  // omega_k - omega_j
  cplx x_jk;
  cplx c_a_jk;
  cplx c_x_jk;
};

/// Dressed-basis matrix elements of X = -i(a - a^dag) and of
/// C^c = -i(c - c^dag) for c = a and c = sigma-.
struct TransitionTable {
  RealVector energies;
  ComplexMatrix x;
  ComplexMatrix c_a;
  ComplexMatrix c_x;

  Index size() const { return energies.size(); }
  double delta(Index j, Index k) const { return energies(k) - energies(j); }
  TransitionRow row(Index j, Index k) const;
  /// All pairs k > j in lexicographic (j, k) order.
  std::vector<TransitionRow> rows() const;
};

/// Matrix elements with magnitude at or below this are treated as exact zeros.
inline constexpr double kSelectionTolerance = 1e-12;
/// Pairs closer than this in energy carry no dissipation or emission.
inline constexpr double kZeroFrequency = 1e-12;

ComplexMatrix build_hamiltonian(const RabiParams& p);

/// Hermitian eigendecomposition with deterministic ordering and phase.
/// Throws std::invalid_argument for non-Hermitian input. Ties are resolved
/// with `tie_breaker` (defaults to no observable, i.e. lexicographic only).
EigenSystem diagonalize(const ComplexMatrix& H);
EigenSystem diagonalize(const ComplexMatrix& H, const ComplexMatrix& tie_breaker);

/// Diagonalize the Rabi Hamiltonian using <sigma+ sigma-> as tie breaker.
EigenSystem diagonalize(const RabiParams& p);

struct LadderRow {
  double g = 0.0;
  RealVector energies;
};

/// Energies of the Rabi Hamiltonian for each coupling in `g_values`.
std::vector<LadderRow> energy_ladder(const RabiParams& base, const std::vector<double>& g_values);

/// X = -i X0 (a - a^dag) on the composite space, X0 = 1.
ComplexMatrix x_operator(const SpaceLayout& layout);

TransitionTable transition_table(const EigenSystem& es, const SpaceLayout& layout);

/// Positive-frequency part of dX/dt in the dressed basis:
/// -i sum_{j<k} Delta_kj X_jk |j><k|. Strictly upper triangular.
ComplexMatrix xdot_plus_dressed(const TransitionTable& tt);

/// Same operator mapped back to the bare basis.
ComplexMatrix xdot_plus(const EigenSystem& es, const TransitionTable& tt);

/// Parity sigma_z (x) (-1)^{a^dag a}; commutes with the Rabi Hamiltonian.
ComplexMatrix parity_operator(const SpaceLayout& layout);

struct TruncationReport {
  Index n_fock = 0;
  Index n_reference = 0;
  double max_relative_shift = 0.0;
  double tolerance = 1e-8;
  bool converged = false;
};

/// Compare the lowest six energies at n_fock and n_fock + 5.
TruncationReport check_truncation(const RabiParams& p, double tolerance = 1e-8);

}  // namespace usc

#endif  // USC_DRESSED_HPP
