#ifndef USC_CONFIG_HPP
#define USC_CONFIG_HPP

#include "usc/dissipation.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace usc {

/// Field-level configuration problem; `field` is a dotted path such as "bath.gamma_a".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct OmegaGridSpec {
  double min = 0.5;
  double max = 1.5;
  double step = 1e-3;
  bool operator==(const OmegaGridSpec&) const = default;
};

struct SweepSpec {
  std::optional<std::vector<double>> g;
  std::optional<std::vector<double>> temperature;
  bool operator==(const SweepSpec&) const = default;
};

struct LadderSpec {
  double g_min = 0.0;
  double g_max = 0.3;
  Index steps = 61;
  Index levels = 8;
  bool operator==(const LadderSpec&) const = default;
};

struct OutputSpec {
  std::string directory = "out";
  std::vector<std::string> formats{"csv"};
  bool operator==(const OutputSpec&) const = default;
};

struct RunConfig {
  std::string name = "custom";
  RabiParams model;
  BathSpec bath;
  SweepSpec sweep;
  OmegaGridSpec omega_grid;
  LadderSpec ladder;
  OutputSpec outputs;
  bool normalize = false;
  double label_tolerance = 0.01;
  std::optional<double> omega0_hz;
  int jobs = 0;  // 0 = hardware concurrency

  /// Throws ConfigError naming the first offending field.
  void validate() const;
  /// (g, T) pairs, g-major.
  std::vector<std::pair<double, double>> points() const;
  bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Built-in parameter sets: "fig1" (ladder), "fig2" (g = 0.1), "fig3" (g = 0.2).
RunConfig recipe(const std::string& name);
std::vector<std::string> recipe_names();

}  // namespace usc

#endif  // USC_CONFIG_HPP
