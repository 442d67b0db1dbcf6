#include "usc/config.hpp"

#include <cmath>
#include <fstream>

namespace usc {

using nlohmann::json;

namespace {

const json& require(const json& parent, const std::string& key, const std::string& path) {
  if (!parent.is_object() || !parent.contains(key)) throw ConfigError(path, "missing required field");
  return parent.at(key);
}

double get_number(const json& parent, const std::string& key, const std::string& path) {
  const json& v = require(parent, key, path);
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  return v.get<double>();
}

double get_number_or(const json& parent, const std::string& key, const std::string& path, double fallback) {
  if (!parent.contains(key)) return fallback;
  return get_number(parent, key, path);
}

Index get_index(const json& parent, const std::string& key, const std::string& path) {
  const json& v = require(parent, key, path);
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  return v.get<Index>();
}

std::vector<double> get_number_list(const json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError(path, "expected a list of numbers");
  std::vector<double> out;
  for (const auto& item : v) {
    if (!item.is_number()) throw ConfigError(path, "expected a list of numbers");
    out.push_back(item.get<double>());
  }
  return out;
}

const json& section(const json& root, const std::string& key) {
  const json& s = require(root, key, key);
  if (!s.is_object()) throw ConfigError(key, "expected an object");
  return s;
}

void check_sweep(const std::optional<std::vector<double>>& values, const std::string& path, bool allow_zero) {
  if (!values) return;
  if (values->empty()) throw ConfigError(path, "sweep list must not be empty");
  for (double v : *values) {
    if (!std::isfinite(v) || v < 0.0 || (!allow_zero && v == 0.0)) {
      throw ConfigError(path, allow_zero ? "values must be finite and >= 0" : "values must be finite and > 0");
    }
  }
}

}  // namespace

void RunConfig::validate() const {
  try {
    model.validate();
    bath.validate();
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    const auto colon = what.find(':');
    throw ConfigError(what.substr(0, colon), colon == std::string::npos ? what : what.substr(colon + 2));
  }
  check_sweep(sweep.g, "sweep.g", true);
  check_sweep(sweep.temperature, "sweep.temperature", true);
  if (!(omega_grid.step > 0.0)) throw ConfigError("omega_grid.step", "must be > 0");
  if (!(omega_grid.max > omega_grid.min)) throw ConfigError("omega_grid.max", "must exceed omega_grid.min");
  if (!(omega_grid.min >= 0.0)) throw ConfigError("omega_grid.min", "must be >= 0");
  if (!(ladder.g_min >= 0.0)) throw ConfigError("ladder.g_min", "must be >= 0");
  if (!(ladder.g_max > ladder.g_min)) throw ConfigError("ladder.g_max", "must exceed ladder.g_min");
  if (ladder.steps < 1) throw ConfigError("ladder.steps", "must be >= 1");
  if (ladder.levels < 1) throw ConfigError("ladder.levels", "must be >= 1");
  if (outputs.formats.empty()) throw ConfigError("outputs.formats", "must list at least one format");
  for (const auto& f : outputs.formats) {
    if (f != "csv" && f != "json") throw ConfigError("outputs.formats", "unknown format '" + f + "'");
  }
  if (outputs.directory.empty()) throw ConfigError("outputs.directory", "must not be empty");
  if (!(label_tolerance > 0.0)) throw ConfigError("label_tolerance", "must be > 0");
  if (omega0_hz && !(*omega0_hz > 0.0)) throw ConfigError("omega0_hz", "must be > 0");
  if (jobs < 0) throw ConfigError("jobs", "must be >= 0");
}

std::vector<std::pair<double, double>> RunConfig::points() const {
  const std::vector<double> gs = sweep.g.value_or(std::vector<double>{model.g});
  const std::vector<double> ts = sweep.temperature.value_or(std::vector<double>{bath.temperature});
  std::vector<std::pair<double, double>> out;
  for (double g : gs) {
    for (double t : ts) out.emplace_back(g, t);
  }
  return out;
}

json to_json(const RunConfig& c) {
  json j;
  j["name"] = c.name;
  j["model"] = {{"omega0", c.model.omega0}, {"omegax", c.model.omegax}, {"g", c.model.g}, {"n_fock", c.model.n_fock}};
  j["bath"] = {{"gamma_a", c.bath.gamma_a}, {"gamma_x", c.bath.gamma_x}, {"temperature", c.bath.temperature}};
  json sweep = json::object();
  if (c.sweep.g) sweep["g"] = *c.sweep.g;
  if (c.sweep.temperature) sweep["temperature"] = *c.sweep.temperature;
  j["sweep"] = sweep;
  j["omega_grid"] = {{"min", c.omega_grid.min}, {"max", c.omega_grid.max}, {"step", c.omega_grid.step}};
  j["ladder"] = {{"g_min", c.ladder.g_min},
                 {"g_max", c.ladder.g_max},
                 {"steps", c.ladder.steps},
                 {"levels", c.ladder.levels}};
  j["outputs"] = {{"directory", c.outputs.directory}, {"formats", c.outputs.formats}};
  j["normalize"] = c.normalize;
  j["label_tolerance"] = c.label_tolerance;
  if (c.omega0_hz) j["omega0_hz"] = *c.omega0_hz;
  j["jobs"] = c.jobs;
  return j;
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("<root>", "expected a JSON object");
  RunConfig c;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ConfigError("name", "expected a string");
    c.name = j["name"].get<std::string>();
  }

  const json& model = section(j, "model");
  c.model.omega0 = get_number(model, "omega0", "model.omega0");
  c.model.omegax = get_number(model, "omegax", "model.omegax");
  c.model.g = get_number(model, "g", "model.g");
  c.model.n_fock = get_index(model, "n_fock", "model.n_fock");

  const json& bath = section(j, "bath");
  c.bath.gamma_a = get_number(bath, "gamma_a", "bath.gamma_a");
  c.bath.gamma_x = get_number(bath, "gamma_x", "bath.gamma_x");
  c.bath.temperature = get_number(bath, "temperature", "bath.temperature");

  if (j.contains("sweep")) {
    const json& s = section(j, "sweep");
    if (s.contains("g")) c.sweep.g = get_number_list(s["g"], "sweep.g");
    if (s.contains("temperature")) c.sweep.temperature = get_number_list(s["temperature"], "sweep.temperature");
  }
  if (j.contains("omega_grid")) {
    const json& s = section(j, "omega_grid");
    c.omega_grid.min = get_number_or(s, "min", "omega_grid.min", c.omega_grid.min);
    c.omega_grid.max = get_number_or(s, "max", "omega_grid.max", c.omega_grid.max);
    c.omega_grid.step = get_number_or(s, "step", "omega_grid.step", c.omega_grid.step);
  }
  if (j.contains("ladder")) {
    const json& s = section(j, "ladder");
    c.ladder.g_min = get_number_or(s, "g_min", "ladder.g_min", c.ladder.g_min);
    c.ladder.g_max = get_number_or(s, "g_max", "ladder.g_max", c.ladder.g_max);
    if (s.contains("steps")) c.ladder.steps = get_index(s, "steps", "ladder.steps");
    if (s.contains("levels")) c.ladder.levels = get_index(s, "levels", "ladder.levels");
  }
  if (j.contains("outputs")) {
    const json& s = section(j, "outputs");
    if (s.contains("directory")) {
      if (!s["directory"].is_string()) throw ConfigError("outputs.directory", "expected a string");
      c.outputs.directory = s["directory"].get<std::string>();
    }
    if (s.contains("formats")) {
      if (!s["formats"].is_array()) throw ConfigError("outputs.formats", "expected a list of strings");
      c.outputs.formats.clear();
      for (const auto& f : s["formats"]) {
        if (!f.is_string()) throw ConfigError("outputs.formats", "expected a list of strings");
        c.outputs.formats.push_back(f.get<std::string>());
      }
    }
  }
  if (j.contains("normalize")) {
    if (!j["normalize"].is_boolean()) throw ConfigError("normalize", "expected true or false");
    c.normalize = j["normalize"].get<bool>();
  }
  c.label_tolerance = get_number_or(j, "label_tolerance", "label_tolerance", c.label_tolerance);
  if (j.contains("omega0_hz")) c.omega0_hz = get_number(j, "omega0_hz", "omega0_hz");
  if (j.contains("jobs")) c.jobs = static_cast<int>(get_index(j, "jobs", "jobs"));

  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("<file>", std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j);
}

RunConfig recipe(const std::string& name) {
  RunConfig c;
  c.name = name;
  c.model = RabiParams{1.0, 1.0, 0.1, 10};
  c.bath = BathSpec{5e-3, 5e-3, 0.1};
  c.omega0_hz = 10e9;
  if (name == "fig1") {
    c.model.g = 0.2;
    c.ladder = LadderSpec{0.0, 0.3, 61, 8};
    c.outputs.directory = "out/fig1";
  } else if (name == "fig2" || name == "fig3") {
    c.model.g = (name == "fig2") ? 0.1 : 0.2;
    c.sweep.temperature = std::vector<double>{0.1, 0.15, 0.2};
    c.outputs.directory = "out/" + name;
  } else {
    throw ConfigError("recipe", "unknown recipe '" + name + "' (expected fig1, fig2 or fig3)");
  }
  return c;
}

std::vector<std::string> recipe_names() { return {"fig1", "fig2", "fig3"}; }

}  // namespace usc
