#ifndef USC_QUADRATURE_HPP
#define USC_QUADRATURE_HPP

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace usc {

struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Lobatto rule on [-1, 1]; includes both endpoints and is
/// exact for polynomials of degree 2n - 3.
inline QuadratureRule gauss_lobatto(int n) {
  if (n < 2) throw std::invalid_argument("gauss_lobatto: need at least 2 nodes");
  const int N = n - 1;
  // (P_N(x), P_{N-1}(x)) by the three-term recurrence.
  auto legendre = [N](double x) {
    double prev = 1.0;
    double cur = x;
    for (int k = 2; k <= N; ++k) {
      const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
      prev = cur;
      cur = next;
    }
    return std::pair{cur, prev};
  };

  QuadratureRule rule{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  for (int i = 0; i < n; ++i) {
    double x = -std::cos(std::numbers::pi * i / N);
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pn, pm] = legendre(x);
      const double step = (x * pn - pm) / (n * pn);
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double pn = legendre(x).first;
    rule.nodes(i) = x;
    rule.weights(i) = 2.0 / (N * n * pn * pn);
  }
  rule.nodes(0) = -1.0;
  rule.nodes(n - 1) = 1.0;
  return rule;
}

}  // namespace usc

#endif  // USC_QUADRATURE_HPP
