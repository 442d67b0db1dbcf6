#ifndef USC_DISSIPATION_HPP
#define USC_DISSIPATION_HPP

#include "usc/dressed.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace usc {

/// Bath parameters in units of omega0 (hbar = k_B = 1).
struct BathSpec {
  double gamma_a = 5e-3;
  double gamma_x = 5e-3;
  double temperature = 0.0;

  void validate() const;
  bool operator==(const BathSpec&) const = default;
};

/// Loss channel: the cavity field (c = a) or the emitter (c = sigma-).
enum class Channel { cavity, emitter };
enum class Direction { decay, excitation };

std::string_view to_string(Channel c);
std::string_view to_string(Direction d);

/// One dissipator rate * D[jump]. `jump` is in the bare basis; for a decay
/// term it is |j><k| (k > j), for excitation |k><j|.
struct LindbladTerm {
  double rate = 0.0;
  ComplexMatrix jump;
  Channel channel = Channel::cavity;
  Index j = 0;
  Index k = 0;
  Direction direction = Direction::decay;
  double delta = 0.0;      // omega_k - omega_j
  double base_rate = 0.0;  // Gamma^{jk}_c before thermal weighting
  double occupancy = 0.0;  // nbar(delta, T)
};

/// Full generator drho/dt = L rho on column-stacked density matrices.
struct Liouvillian {
  ComplexMatrix matrix;
  std::vector<LindbladTerm> terms;
  ComplexMatrix hamiltonian;

  Index hilbert_dim() const { return hamiltonian.rows(); }
};

/// Spectral weight 2 pi d_c(Delta) alpha_c(Delta)^2 multiplying |C^c_jk|^2.
using SpectralWeight = std::function<double(Channel, double delta)>;

/// Ohmic 1-D waveguide weight gamma_c * Delta / omega0.
SpectralWeight ohmic_weight(const BathSpec& bath, double omega0);

/// Bose-Einstein occupancy 1 / (exp(delta / T) - 1); exactly 0 at T = 0.
double thermal_occupancy(double delta, double temperature);

/// Gamma^{jk}_c = gamma_c (Delta_kj / omega0) |C^c_jk|^2, zero for
/// forbidden or zero-frequency pairs.
double relaxation_rate(Channel channel, Index j, Index k, const TransitionTable& tt, const BathSpec& bath,
                       double omega0);
double relaxation_rate(Channel channel, Index j, Index k, const TransitionTable& tt,
                       const SpectralWeight& weight);

/// Decay (rate Gamma (1 + nbar)) and excitation (rate Gamma nbar) terms for
/// every channel and pair with Gamma > 0. Channel-major, then (j, k), decay
/// before excitation.
std::vector<LindbladTerm> build_terms(const TransitionTable& tt, const EigenSystem& es, const BathSpec& bath,
                                      double omega0);
std::vector<LindbladTerm> build_terms(const TransitionTable& tt, const EigenSystem& es, const BathSpec& bath,
                                      const SpectralWeight& weight);

/// -i[H, .] + sum rate D[jump], column-stacking vectorization.
Liouvillian build_liouvillian(const ComplexMatrix& H, std::vector<LindbladTerm> terms);

/// Column-stacking vec/unvec.
ComplexVector vectorize(const ComplexMatrix& rho);
ComplexMatrix unvectorize(const ComplexVector& v, Index dim);

/// Superoperators for left/right multiplication: vec(A rho B) = (B^T (x) A) vec(rho).
ComplexMatrix left_right_superop(const ComplexMatrix& A, const ComplexMatrix& B);

/// Convenience: H, eigensystem, table, terms and Liouvillian for one point.
struct OpenSystem {
  RabiParams model;
  BathSpec bath;
  ComplexMatrix hamiltonian;
  EigenSystem eigen;
  TransitionTable transitions;
  Liouvillian liouvillian;
};

OpenSystem assemble(const RabiParams& model, const BathSpec& bath);

}  // namespace usc

#endif  // USC_DISSIPATION_HPP
