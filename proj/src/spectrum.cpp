#include "usc/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <cmath>
#include <sstream>

namespace usc {

double SpectrumResult::min_relative_value() const {
  if (s_values.size() == 0) return 0.0;
  const double scale_abs = s_values.cwiseAbs().maxCoeff();
  if (scale_abs == 0.0) return 0.0;
  return s_values.minCoeff() / scale_abs;
}

RealVector make_omega_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("omega_grid: need min < max and step > 0");
  }
  const auto count = static_cast<Index>(std::floor((hi - lo) / step + 1e-9)) + 1;
  RealVector grid(count);
  for (Index i = 0; i < count; ++i) grid(i) = lo + static_cast<double>(i) * step;
  return grid;
}

namespace {

bool is_uniform(const RealVector& omega) {
  if (omega.size() < 3) return false;
  const double step = omega(1) - omega(0);
  for (Index i = 1; i < omega.size(); ++i) {
    if (std::abs((omega(i) - omega(i - 1)) - step) > 1e-9 * std::abs(step)) return false;
  }
  return step > 0.0;
}

void check_increasing(const RealVector& omega) {
  for (Index i = 1; i < omega.size(); ++i) {
    if (!(omega(i) > omega(i - 1))) throw std::invalid_argument("spectrum: omega grid must be strictly increasing");
  }
}

}  // namespace

SpectrumResult spectrum(const CorrelationFunction& cf, const RealVector& omega) {
  check_increasing(omega);
  if (cf.tau.size() != cf.values.size() || cf.tau.size() != cf.weights.size()) {
    throw std::invalid_argument("spectrum: inconsistent correlation grid");
  }
  const double ratio = cf.decay_ratio();
  if (ratio > 1e-6) {
    std::ostringstream msg;
    msg << "spectrum: correlation decayed only to " << ratio << " of its initial value; extend tau_max";
    throw IntegrationError(msg.str(), ratio);
  }

  SpectrumResult sr;
  sr.omega = omega;
  sr.route = SpectrumRoute::quadrature;
  ComplexVector acc = ComplexVector::Zero(omega.size());

  if (is_uniform(omega)) {
    // e^{i omega_m tau} = e^{i omega_0 tau} (e^{i d_omega tau})^m
    const double w0 = omega(0);
    const double dw = omega(1) - omega(0);
    for (Index i = 0; i < cf.tau.size(); ++i) {
      const cplx f = cf.weights(i) * cf.values(i);
      if (f == cplx(0.0)) continue;
      cplx phase = f * std::polar(1.0, w0 * cf.tau(i));
      const cplx step = std::polar(1.0, dw * cf.tau(i));
      for (Index m = 0; m < omega.size(); ++m) {
        acc(m) += phase;
        phase *= step;
      }
    }
  } else {
    for (Index m = 0; m < omega.size(); ++m) {
      for (Index i = 0; i < cf.tau.size(); ++i) {
        acc(m) += cf.weights(i) * cf.values(i) * std::polar(1.0, omega(m) * cf.tau(i));
      }
    }
  }
  sr.s_values = 2.0 * acc.real();
  return sr;
}

SpectrumResult spectrum_eigen(const Liouvillian& L, const DensityMatrix& rho_ss, const ComplexMatrix& xdot_plus,
                              const RealVector& omega) {
  check_increasing(omega);
  constexpr double kMaxCondition = 1e10;

  Eigen::ComplexEigenSolver<ComplexMatrix> solver(L.matrix, true);
  double condition = std::numeric_limits<double>::infinity();
  Eigen::PartialPivLU<ComplexMatrix> lu;
  if (solver.info() == Eigen::Success) {
    lu.compute(solver.eigenvectors());
    condition = solver.eigenvectors().norm() * lu.inverse().norm();
  }
  if (!(condition <= kMaxCondition)) {
    SpectrumResult sr = spectrum(qrt_correlation(L, rho_ss, xdot_plus), omega);
    std::ostringstream msg;
    msg << "Liouvillian eigenbasis ill-conditioned (condition " << condition
        << "); used quadrature route instead";
    sr.warning = msg.str();
    return sr;
  }

  const ComplexVector observe = vectorize(xdot_plus.transpose());
  const ComplexVector initial = vectorize(rho_ss.matrix * xdot_plus.adjoint());
  const ComplexVector left = solver.eigenvectors().transpose() * observe;
  const ComplexVector right = lu.solve(initial);
  const ComplexVector& lambda = solver.eigenvalues();

  SpectrumResult sr;
  sr.omega = omega;
  sr.route = SpectrumRoute::eigen;
  sr.s_values.resize(omega.size());
  for (Index m = 0; m < omega.size(); ++m) {
    cplx sum = 0.0;
    for (Index r = 0; r < lambda.size(); ++r) {
      sum -= left(r) * right(r) / (lambda(r) + cplx(0.0, omega(m)));
    }
    sr.s_values(m) = 2.0 * sum.real();
  }
  return sr;
}

void normalize_to_peak(SpectrumResult& sr) {
  if (sr.s_values.size() == 0) return;
  const double peak = sr.s_values.maxCoeff();
  if (!(peak > 0.0)) return;
  const double factor = 1.0 / peak;
  sr.s_values *= factor;
  for (auto& p : sr.peaks) p.height *= factor;
  sr.scale *= factor;
  sr.normalized = true;
}

double kelvin_of(double temperature, double omega0_hz) {
  if (!(temperature > 0.0) || !(omega0_hz > 0.0)) {
    throw std::invalid_argument("kelvin_of: temperature and frequency must be positive");
  }
  constexpr double planck = 6.62607015e-34;     // J s (exact, SI 2019)
  constexpr double boltzmann = 1.380649e-23;    // J / K (exact, SI 2019)
  return temperature * planck * omega0_hz / boltzmann;
}

}  // namespace usc
