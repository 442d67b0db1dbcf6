#include "usc/dynamics.hpp"
#include "usc/quadrature.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace usc {

double CorrelationFunction::decay_ratio() const {
  const double v0 = values.size() > 0 ? std::abs(values(0)) : 0.0;
  if (v0 == 0.0) return 0.0;
  const Index tail_count = std::min<Index>(values.size(), std::max<Index>(nodes_per_panel, 1));
  return values.tail(tail_count).cwiseAbs().maxCoeff() / v0;
}

namespace {

// u <- exp(A t) u by Taylor series on substeps with ||A||_1 dt <= 1/2.
void propagate_taylor(const ComplexMatrix& A, double norm1, double t, ComplexVector& u) {
  if (t <= 0.0) return;
  const Index steps = std::max<Index>(1, static_cast<Index>(std::ceil(2.0 * norm1 * t)));
  const double dt = t / static_cast<double>(steps);
  ComplexVector term(u.size());
  for (Index s = 0; s < steps; ++s) {
    term = u;
    ComplexVector sum = u;
    for (int k = 1; k < 60; ++k) {
      term = (A * term) * (dt / k);
      sum += term;
      if (term.norm() <= 1e-18 * sum.norm()) break;
    }
    u = sum;
  }
}

}  // namespace

CorrelationFunction qrt_correlation(const Liouvillian& L, const DensityMatrix& rho_ss,
                                    const ComplexMatrix& xdot_plus, const CorrelationOptions& options) {
  const Index d = L.hilbert_dim();
  if (rho_ss.matrix.rows() != d || xdot_plus.rows() != d) {
    throw std::invalid_argument("qrt_correlation: operator dimensions do not match the Liouvillian");
  }
  if (!(options.panel_length > 0.0) || options.nodes_per_panel < 2) {
    throw std::invalid_argument("qrt_correlation: invalid panel layout");
  }

  const int n = options.nodes_per_panel;
  const double h = options.panel_length;
  const QuadratureRule rule = gauss_lobatto(n);
  const RealVector offsets = 0.5 * h * (rule.nodes.array() + 1.0);
  const RealVector node_weights = 0.5 * h * rule.weights;

  // tr[A M] = vec(A^T) . vec(M)
  const ComplexVector observe = vectorize(xdot_plus.transpose());
  // Rows of w^T e^{L s_i}, built by propagating w with L^T.
  const ComplexMatrix Lt = L.matrix.transpose();
  const double norm1 = Lt.cwiseAbs().colwise().sum().maxCoeff();
  ComplexMatrix rows(n, d * d);
  {
    ComplexVector u = observe;
    double at = 0.0;
    for (int i = 0; i < n; ++i) {
      propagate_taylor(Lt, norm1, offsets(i) - at, u);
      at = offsets(i);
      rows.row(i) = u.transpose();
    }
  }
  const ComplexMatrix panel_step = (L.matrix * h).exp();

  ComplexVector v = vectorize(rho_ss.matrix * xdot_plus.adjoint());
  const double v0 = v.norm();

  std::vector<cplx> values;
  std::vector<double> taus;
  std::vector<double> weights;
  Index panels = 0;
  double tail = v0 > 0.0 ? 1.0 : 0.0;
  const Index max_panels = options.fixed_panels.value_or(static_cast<Index>(std::ceil(options.max_tau / h)));

  auto done = [&]() {
    if (options.fixed_panels) return panels >= *options.fixed_panels;
    return panels > 0 && tail <= options.decay_tolerance;
  };

  while (!done()) {
    if (panels >= max_panels) {
      std::ostringstream msg;
      msg << "qrt_correlation: correlation has not decayed by tau = " << panels * h << " (achieved "
          << tail << ", requested " << options.decay_tolerance << ")";
      throw IntegrationError(msg.str(), tail);
    }
    const ComplexVector at_nodes = rows * v;
    const double t0 = static_cast<double>(panels) * h;
    for (int i = 0; i < n; ++i) {
      if (i == 0 && panels > 0) {
        weights.back() += node_weights(0);
        continue;
      }
      taus.push_back(t0 + offsets(i));
      values.push_back(at_nodes(i));
      weights.push_back(node_weights(i));
    }
    v = panel_step * v;
    ++panels;
    tail = v0 > 0.0 ? v.norm() / v0 : 0.0;
  }

  CorrelationFunction cf;
  cf.tau = Eigen::Map<const RealVector>(taus.data(), static_cast<Index>(taus.size()));
  cf.values = Eigen::Map<const ComplexVector>(values.data(), static_cast<Index>(values.size()));
  cf.weights = Eigen::Map<const RealVector>(weights.data(), static_cast<Index>(weights.size()));
  cf.tail = tail;
  cf.nodes_per_panel = n;
  return cf;
}

}  // namespace usc
