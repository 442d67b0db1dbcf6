// Command-line front end: thermal emission spectra, energy ladders and
// config validation for the ultrastrongly coupled Rabi model.

#include "usc/config.hpp"
#include "usc/export.hpp"
#include "usc/runner.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitTruncation = 3;
constexpr int kExitRuntime = 1;

struct CommonFlags {
  std::string config_path;
  std::string recipe_name;
  std::string out_dir;
  std::string format;
  bool normalize = false;
  int jobs = -1;
  std::optional<double> g;
  std::optional<double> temperature;
  std::optional<long> n_fock;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  auto* cfg = cmd->add_option("--config", f.config_path, "JSON run configuration");
  auto* rec = cmd->add_option("--recipe", f.recipe_name, "Built-in parameter set")
                  ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  cfg->excludes(rec);
  cmd->add_option("--out", f.out_dir, "Output directory (overrides outputs.directory)");
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--normalize", f.normalize, "Scale each spectrum so its maximum is 1");
  cmd->add_option("--jobs", f.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--g", f.g, "Override model.g (clears any g sweep)");
  cmd->add_option("--temperature", f.temperature, "Override bath.temperature (clears any temperature sweep)");
  cmd->add_option("--n-fock", f.n_fock, "Override model.n_fock");
}

usc::RunConfig resolve(const CommonFlags& f) {
  usc::RunConfig c;
  if (!f.config_path.empty()) {
    c = usc::load_config(f.config_path);
  } else if (!f.recipe_name.empty()) {
    c = usc::recipe(f.recipe_name);
  } else {
    throw usc::ConfigError("--config", "one of --config or --recipe is required");
  }
  if (!f.out_dir.empty()) c.outputs.directory = f.out_dir;
  if (!f.format.empty()) c.outputs.formats = {f.format};
  if (f.normalize) c.normalize = true;
  if (f.jobs >= 0) c.jobs = f.jobs;
  if (f.g) {
    c.model.g = *f.g;
    c.sweep.g.reset();
  }
  if (f.temperature) {
    c.bath.temperature = *f.temperature;
    c.sweep.temperature.reset();
  }
  if (f.n_fock) c.model.n_fock = *f.n_fock;
  c.validate();
  return c;
}

bool wants(const usc::RunConfig& c, const std::string& format) {
  for (const auto& f : c.outputs.formats) {
    if (f == format) return true;
  }
  return false;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string temperature_note(const usc::RunConfig& c, double t) {
  if (!c.omega0_hz || !(t > 0.0)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), " (%.1f mK)", 1e3 * usc::kelvin_of(t, *c.omega0_hz));
  return buf;
}

int run_spectrum(const usc::RunConfig& c) {
  for (double g : c.sweep.g.value_or(std::vector<double>{c.model.g})) {
    usc::RabiParams p = c.model;
    p.g = g;
    const auto report = usc::check_truncation(p);
    if (!report.converged) {
      std::cerr << "error: truncation n_fock=" << report.n_fock << " not converged at g=" << g
                << " (relative shift " << report.max_relative_shift << " vs n_fock=" << report.n_reference
                << "); raise model.n_fock\n";
      return kExitTruncation;
    }
  }

  const auto results = usc::run_sweep(c, c.jobs);
  const fs::path dir(c.outputs.directory);
  fs::create_directories(dir);

  for (const auto& r : results) {
    const std::string stem = usc::point_stem(r.g, r.temperature);
    if (wants(c, "csv")) {
      std::ofstream csv(dir / (stem + ".csv"), std::ios::binary);
      usc::write_spectrum_csv(csv, r.spectrum);
      write_text(dir / (stem + ".peaks.json"), usc::spectrum_to_json(r, c, false).dump(2) + "\n");
    }
    if (wants(c, "json")) {
      write_text(dir / (stem + ".json"), usc::spectrum_to_json(r, c, true).dump(2) + "\n");
    }

    std::printf("g=%g T=%g%s: %zu peaks [%s route]\n", r.g, r.temperature, temperature_note(c, r.temperature).c_str(),
                r.spectrum.peaks.size(), r.spectrum.route == usc::SpectrumRoute::eigen ? "eigen" : "quadrature");
    if (!r.spectrum.warning.empty()) std::printf("  warning: %s\n", r.spectrum.warning.c_str());
    for (const auto& p : r.spectrum.peaks) {
      if (p.label) {
        std::printf("  omega=%.5f  height=%.6e  |%td> -> |%td>  Delta=%.5f  Gamma=%.4e\n", p.frequency, p.height,
                    p.label->k, p.label->j, p.label->delta, p.label->rate);
      } else {
        std::printf("  omega=%.5f  height=%.6e  unassigned\n", p.frequency, p.height);
      }
    }
  }
  std::printf("wrote %zu spectra to %s\n", results.size(), dir.string().c_str());
  return 0;
}

int run_ladder(const usc::RunConfig& c) {
  std::vector<double> gs;
  const usc::Index steps = c.ladder.steps;
  for (usc::Index i = 0; i < steps; ++i) {
    gs.push_back(steps == 1 ? c.ladder.g_min
                            : c.ladder.g_min + (c.ladder.g_max - c.ladder.g_min) * static_cast<double>(i) /
                                                   static_cast<double>(steps - 1));
  }
  const auto rows = usc::energy_ladder(c.model, gs);
  const fs::path dir(c.outputs.directory);
  fs::create_directories(dir);
  if (wants(c, "csv")) {
    std::ofstream csv(dir / "ladder.csv", std::ios::binary);
    usc::write_ladder_csv(csv, rows, c.ladder.levels);
  }
  if (wants(c, "json")) {
    write_text(dir / "ladder.json", usc::ladder_to_json(rows, c.ladder.levels, c).dump(2) + "\n");
  }
  std::printf("wrote ladder (%zu couplings, %td levels) to %s\n", rows.size(), c.ladder.levels, dir.string().c_str());
  return 0;
}

int run_validate(const usc::RunConfig& c) {
  std::printf("config '%s' is valid\n", c.name.c_str());
  std::printf("  omega0 = %g, omegax = %g, n_fock = %td\n", c.model.omega0, c.model.omegax, c.model.n_fock);
  std::printf("  gamma_a = %g, gamma_x = %g\n", c.bath.gamma_a, c.bath.gamma_x);
  std::printf("  omega grid [%g, %g] step %g\n", c.omega_grid.min, c.omega_grid.max, c.omega_grid.step);
  if (c.omega0_hz) std::printf("  omega0 / 2pi = %g Hz\n", *c.omega0_hz);

  std::printf("  points:\n");
  for (const auto& [g, t] : c.points()) {
    std::printf("    g = %g, T = %g%s\n", g, t, temperature_note(c, t).c_str());
  }

  bool warned = false;
  for (double g : c.sweep.g.value_or(std::vector<double>{c.model.g})) {
    usc::RabiParams p = c.model;
    p.g = g;
    const auto r = usc::check_truncation(p);
    std::printf("  truncation g=%g: n_fock=%td vs %td, max relative shift %.3e %s\n", g, r.n_fock, r.n_reference,
                r.max_relative_shift, r.converged ? "ok" : "WARNING: not converged, raise n_fock");
    warned = warned || !r.converged;
  }
  std::printf("status: %s\n", warned ? "warning" : "ok");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal emission spectra of the ultrastrongly coupled Rabi model"};
  app.set_version_flag("--version", std::string(usc::kVersion));
  app.require_subcommand(1);

  CommonFlags spectrum_flags, ladder_flags, validate_flags;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Compute emission spectra for every sweep point");
  add_common(spectrum_cmd, spectrum_flags);

  auto* ladder_cmd = app.add_subcommand("ladder", "Export dressed energies versus coupling");
  add_common(ladder_cmd, ladder_flags);
  std::optional<double> g_min, g_max;
  std::optional<long> steps, levels;
  ladder_cmd->add_option("--g-min", g_min, "Lowest coupling");
  ladder_cmd->add_option("--g-max", g_max, "Highest coupling");
  ladder_cmd->add_option("--steps", steps, "Number of couplings");
  ladder_cmd->add_option("--levels", levels, "Energies per row");

  auto* validate_cmd = app.add_subcommand("validate", "Check a configuration and its truncation");
  add_common(validate_cmd, validate_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum_cmd->parsed()) return run_spectrum(resolve(spectrum_flags));
    if (ladder_cmd->parsed()) {
      usc::RunConfig c = resolve(ladder_flags);
      if (g_min) c.ladder.g_min = *g_min;
      if (g_max) c.ladder.g_max = *g_max;
      if (steps) c.ladder.steps = *steps;
      if (levels) c.ladder.levels = *levels;
      c.validate();
      return run_ladder(c);
    }
    if (validate_cmd->parsed()) return run_validate(resolve(validate_flags));
  } catch (const usc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
