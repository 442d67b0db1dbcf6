#include "usc/export.hpp"

#include <cstdio>

namespace usc {

using nlohmann::json;

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_spectrum_csv(std::ostream& out, const SpectrumResult& sr) {
  out << "omega,s_value\n";
  for (Index i = 0; i < sr.omega.size(); ++i) {
    out << format_number(sr.omega(i)) << ',' << format_number(sr.s_values(i)) << '\n';
  }
}

void write_ladder_csv(std::ostream& out, const std::vector<LadderRow>& rows, Index levels) {
  if (!rows.empty()) levels = std::min(levels, rows.front().energies.size());
  out << "g";
  for (Index e = 0; e < levels; ++e) out << ",E" << e;
  out << '\n';
  for (const auto& row : rows) {
    out << format_number(row.g);
    const Index count = std::min(levels, row.energies.size());
    for (Index e = 0; e < count; ++e) out << ',' << format_number(row.energies(e));
    out << '\n';
  }
}

json peaks_to_json(const std::vector<Peak>& peaks) {
  json arr = json::array();
  for (const auto& p : peaks) {
    json entry = {{"frequency", p.frequency}, {"height", p.height}};
    if (p.label) {
      entry["label"] = {{"j", p.label->j}, {"k", p.label->k}};
      entry["delta"] = p.label->delta;
      entry["rate"] = p.label->rate;
      entry["margin"] = p.label->margin;
    } else {
      entry["label"] = nullptr;
    }
    arr.push_back(entry);
  }
  return arr;
}

json terms_to_json(const std::vector<LindbladTerm>& terms) {
  json arr = json::array();
  for (const auto& t : terms) {
    arr.push_back({{"channel", std::string(to_string(t.channel))},
                   {"j", t.j},
                   {"k", t.k},
                   {"delta", t.delta},
                   {"gamma", t.base_rate},
                   {"nbar", t.occupancy},
                   {"rate", t.rate},
                   {"direction", std::string(to_string(t.direction))}});
  }
  return arr;
}

json spectrum_to_json(const PointResult& point, const RunConfig& config, bool include_samples) {
  const SpectrumResult& sr = point.spectrum;
  json j;
  j["version"] = kVersion;
  j["config"] = to_json(config);
  j["g"] = point.g;
  j["temperature"] = point.temperature;
  if (config.omega0_hz) j["temperature_kelvin"] = point.temperature > 0.0 ? kelvin_of(point.temperature, *config.omega0_hz) : 0.0;
  j["normalization"] = {{"normalized", sr.normalized}, {"scale", sr.scale}, {"units", sr.normalized ? "peak" : "raw, X0 = 1"}};
  j["route"] = sr.route == SpectrumRoute::eigen ? "eigen" : "quadrature";
  if (!sr.warning.empty()) j["warning"] = sr.warning;
  j["truncation"] = {{"n_fock", point.truncation.n_fock},
                     {"n_reference", point.truncation.n_reference},
                     {"max_relative_shift", point.truncation.max_relative_shift},
                     {"converged", point.truncation.converged}};
  j["peaks"] = peaks_to_json(sr.peaks);
  if (include_samples) {
    j["omega"] = std::vector<double>(sr.omega.data(), sr.omega.data() + sr.omega.size());
    j["s_value"] = std::vector<double>(sr.s_values.data(), sr.s_values.data() + sr.s_values.size());
  }
  return j;
}

json ladder_to_json(const std::vector<LadderRow>& rows, Index levels, const RunConfig& config) {
  json j;
  j["version"] = kVersion;
  j["config"] = to_json(config);
  json arr = json::array();
  for (const auto& row : rows) {
    const Index count = std::min(levels, row.energies.size());
    arr.push_back({{"g", row.g},
                   {"energies", std::vector<double>(row.energies.data(), row.energies.data() + count)}});
  }
  j["ladder"] = arr;
  return j;
}

std::string point_stem(double g, double temperature) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "spectrum_g%.10g_T%.10g", g, temperature);
  return buf;
}

}  // namespace usc
