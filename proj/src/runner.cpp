#include "usc/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

namespace usc {

PointResult compute_point(const RunConfig& config, double g, double temperature) {
  const auto start = std::chrono::steady_clock::now();
  RabiParams model = config.model;
  model.g = g;
  BathSpec bath = config.bath;
  bath.temperature = temperature;

  PointResult out;
  out.g = g;
  out.temperature = temperature;
  out.truncation = check_truncation(model);

  const OpenSystem sys = assemble(model, bath);
  const DensityMatrix rho = steady_state(sys.liouvillian);
  const ComplexMatrix xdp = xdot_plus(sys.eigen, sys.transitions);
  const RealVector grid = make_omega_grid(config.omega_grid.min, config.omega_grid.max, config.omega_grid.step);

  out.spectrum = spectrum_eigen(sys.liouvillian, rho, xdp, grid);
  out.spectrum = label_peaks(std::move(out.spectrum), sys.transitions, config.label_tolerance, &sys.liouvillian.terms);
  if (config.normalize) normalize_to_peak(out.spectrum);
  out.terms = sys.liouvillian.terms;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<PointResult> run_sweep(const RunConfig& config, int jobs) {
  const auto points = config.points();
  std::vector<PointResult> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());

  unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        results[i] = compute_point(config, points[i].first, points[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace usc
