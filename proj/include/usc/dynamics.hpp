#ifndef USC_DYNAMICS_HPP
#define USC_DYNAMICS_HPP

#include "usc/dissipation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace usc {

struct DensityMatrix {
  ComplexMatrix matrix;

  double trace_defect() const { return std::abs(matrix.trace() - cplx(1.0)); }
  double min_eigenvalue() const;
  /// Hermitian, unit trace and positive within the given tolerances.
  bool is_physical(double herm_tol = 1e-10, double trace_tol = 1e-10, double eig_tol = 1e-9) const;
};

/// Raised when the null space of L is not one-dimensional.
class SteadyStateError : public std::runtime_error {
 public:
  SteadyStateError(const std::string& what, double residual_first, double residual_second)
      : std::runtime_error(what), residual_first_(residual_first), residual_second_(residual_second) {}
  double residual_first() const { return residual_first_; }
  double residual_second() const { return residual_second_; }

 private:
  double residual_first_;
  double residual_second_;
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double achieved) : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

/// Stationary state from the null space of L, normalized to unit trace.
DensityMatrix steady_state(const Liouvillian& L);

/// 0.5 * sum |eig(A - B)|
double trace_distance(const ComplexMatrix& A, const ComplexMatrix& B);

/// exp(-H / T) / Z; T = 0 gives the projector on the lowest level.
DensityMatrix gibbs_state(const ComplexMatrix& H, double temperature);

/// Stationary emission correlation <Xdot-(t) Xdot+(t + tau)>, t -> infinity,
/// sampled on a composite Gauss-Lobatto grid whose quadrature weights are
/// carried along for the Fourier transform.
struct CorrelationFunction {
  RealVector tau;
  ComplexVector values;
  RealVector weights;
  /// |v(tau_max)| / |v(0)| of the propagated operator.
  double tail = 0.0;
  int nodes_per_panel = 0;

  /// max |values| over the final panel relative to |values(0)|.
  double decay_ratio() const;
};

struct CorrelationOptions {
  double panel_length = 2.0;
  int nodes_per_panel = 16;
  /// Stop once the propagated operator norm drops below this fraction.
  double decay_tolerance = 1e-10;
  double max_tau = 1e6;
  /// When set, exactly this many panels are used (no adaptive stopping).
  std::optional<Index> fixed_panels;
};

/// Quantum regression: values(tau) = tr[xdot_plus e^{L tau}(rho_ss xdot_plus^dag)].
CorrelationFunction qrt_correlation(const Liouvillian& L, const DensityMatrix& rho_ss,
                                    const ComplexMatrix& xdot_plus, const CorrelationOptions& options = {});

struct Peak {
  double frequency = 0.0;
  double height = 0.0;
  struct Label {
    Index j = 0;
    Index k = 0;
    double delta = 0.0;
    double rate = 0.0;    // Gamma^{jk}_a + Gamma^{jk}_x
    double margin = 0.0;  // distance to runner-up minus distance to winner
  };
  std::optional<Label> label;
};

enum class SpectrumRoute { eigen, quadrature };

struct SpectrumResult {
  RealVector omega;
  RealVector s_values;
  std::vector<Peak> peaks;
  /// s_values = raw * scale; scale = 1 for raw model units.
  double scale = 1.0;
  bool normalized = false;
  SpectrumRoute route = SpectrumRoute::eigen;
  std::string warning;

  /// min(s) / max|s|; non-negative spectra give >= -1e-9.
  double min_relative_value() const;
};

/// Inclusive uniform grid [lo, hi] with the given step.
RealVector make_omega_grid(double lo, double hi, double step);

/// S(omega) = 2 Re sum_i w_i cf(tau_i) e^{i omega tau_i}.
/// Throws IntegrationError if cf has not decayed below 1e-6 of cf(0).
SpectrumResult spectrum(const CorrelationFunction& cf, const RealVector& omega);

/// S(omega) = -2 Re sum_m l_m r_m / (lambda_m + i omega) from the
/// eigendecomposition of L. Falls back to the quadrature route (recording a
/// warning) when the eigenvector matrix is ill-conditioned.
SpectrumResult spectrum_eigen(const Liouvillian& L, const DensityMatrix& rho_ss, const ComplexMatrix& xdot_plus,
                              const RealVector& omega);

inline constexpr double kDefaultPeakFloor = 1e-5;

/// Local maxima at or above floor * max(s), refined by a parabola through
/// the three surrounding samples.
std::vector<Peak> detect_peaks(const RealVector& omega, const RealVector& s, double floor = kDefaultPeakFloor);

/// Assign each peak the allowed transition whose Delta is nearest, if within
/// tolerance. Detects peaks first when `sr.peaks` is empty.
SpectrumResult label_peaks(SpectrumResult sr, const TransitionTable& tt, double tolerance,
                           const std::vector<LindbladTerm>* terms = nullptr, double floor = kDefaultPeakFloor);

/// Scale so the tallest sample equals 1.
void normalize_to_peak(SpectrumResult& sr);

/// Temperature in units of h f0 / k_B converted to kelvin.
double kelvin_of(double temperature, double omega0_hz);

}  // namespace usc

#endif  // USC_DYNAMICS_HPP
