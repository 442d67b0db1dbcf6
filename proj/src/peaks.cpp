#include "usc/dynamics.hpp"

#include <cmath>
#include <limits>

namespace usc {

std::vector<Peak> detect_peaks(const RealVector& omega, const RealVector& s, double floor) {
  std::vector<Peak> peaks;
  if (omega.size() != s.size()) throw std::invalid_argument("detect_peaks: grid and values differ in length");
  if (s.size() < 3) return peaks;
  const double top = s.maxCoeff();
  if (!(top > 0.0)) return peaks;
  const double threshold = floor * top;

  for (Index i = 1; i + 1 < s.size(); ++i) {
    if (!(s(i) > s(i - 1) && s(i) >= s(i + 1) && s(i) >= threshold)) continue;
    const double y0 = s(i - 1), y1 = s(i), y2 = s(i + 1);
    const double h_left = omega(i) - omega(i - 1);
    const double h_right = omega(i + 1) - omega(i);
    Peak p{omega(i), y1, std::nullopt};
    // Vertex of the parabola through the three samples (non-uniform spacing).
    const double d1 = (y1 - y0) / h_left;
    const double d2 = (y2 - y1) / h_right;
    const double curvature = (d2 - d1) / (h_left + h_right);
    if (curvature < 0.0) {
      const double slope_mid = d1 + curvature * h_left;  // derivative at omega(i)
      const double shift = -slope_mid / (2.0 * curvature);
      if (std::abs(shift) <= std::max(h_left, h_right)) {
        p.frequency = omega(i) + shift;
        p.height = y1 + slope_mid * shift + curvature * shift * shift;
      }
    }
    peaks.push_back(p);
  }
  return peaks;
}

SpectrumResult label_peaks(SpectrumResult sr, const TransitionTable& tt, double tolerance,
                           const std::vector<LindbladTerm>* terms, double floor) {
  if (sr.peaks.empty()) sr.peaks = detect_peaks(sr.omega, sr.s_values, floor);

  struct Candidate {
    Index j, k;
    double delta;
  };
  std::vector<Candidate> candidates;
  const Index n = tt.size();
  for (Index j = 0; j < n; ++j) {
    for (Index k = j + 1; k < n; ++k) {
      const double d = tt.delta(j, k);
      if (d > kZeroFrequency && std::abs(tt.x(j, k)) > kSelectionTolerance) candidates.push_back({j, k, d});
    }
  }

  for (auto& peak : sr.peaks) {
    peak.label.reset();
    const Candidate* best = nullptr;
    double best_dist = std::numeric_limits<double>::infinity();
    double second_dist = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) {
      const double dist = std::abs(c.delta - peak.frequency);
      if (dist < best_dist) {
        second_dist = best_dist;
        best_dist = dist;
        best = &c;
      } else if (dist < second_dist) {
        second_dist = dist;
      }
    }
    if (best == nullptr || best_dist > tolerance) continue;

    Peak::Label label{best->j, best->k, best->delta, 0.0, second_dist - best_dist};
    if (terms != nullptr) {
      for (const auto& t : *terms) {
        if (t.direction == Direction::decay && t.j == best->j && t.k == best->k) label.rate += t.base_rate;
      }
    }
    peak.label = label;
  }
  return sr;
}

}  // namespace usc
