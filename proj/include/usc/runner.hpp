#ifndef USC_RUNNER_HPP
#define USC_RUNNER_HPP

#include "usc/config.hpp"
#include "usc/dynamics.hpp"

#include <vector>

namespace usc {

struct PointResult {
  double g = 0.0;
  double temperature = 0.0;
  SpectrumResult spectrum;
  TruncationReport truncation;
  std::vector<LindbladTerm> terms;
  double seconds = 0.0;
};

/// Full pipeline for one (g, T) point: assemble, steady state, eigen-route
/// spectrum, peak detection and labeling.
PointResult compute_point(const RunConfig& config, double g, double temperature);

/// Every sweep point, computed on `jobs` worker threads (0 = hardware
/// concurrency). Output order matches RunConfig::points() regardless of jobs.
std::vector<PointResult> run_sweep(const RunConfig& config, int jobs);

}  // namespace usc

#endif  // USC_RUNNER_HPP
