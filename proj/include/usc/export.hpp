#ifndef USC_EXPORT_HPP
#define USC_EXPORT_HPP

#include "usc/config.hpp"
#include "usc/dynamics.hpp"
#include "usc/runner.hpp"

#include "json.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace usc {

inline constexpr const char* kVersion = USC_VERSION;

/// 17 significant digits, '.' decimal separator.
std::string format_number(double value);

/// CSV `omega,s_value`.
void write_spectrum_csv(std::ostream& out, const SpectrumResult& sr);

/// CSV `g,E0,E1,...` keeping the lowest `levels` energies.
void write_ladder_csv(std::ostream& out, const std::vector<LadderRow>& rows, Index levels);

nlohmann::json peaks_to_json(const std::vector<Peak>& peaks);
nlohmann::json terms_to_json(const std::vector<LindbladTerm>& terms);

/// Peak table plus provenance (resolved config, version). With
/// `include_samples` the omega/s arrays are embedded too.
nlohmann::json spectrum_to_json(const PointResult& point, const RunConfig& config, bool include_samples);
nlohmann::json ladder_to_json(const std::vector<LadderRow>& rows, Index levels, const RunConfig& config);

/// File stem for one sweep point, e.g. "spectrum_g0.1_T0.15".
std::string point_stem(double g, double temperature);

}  // namespace usc

#endif  // USC_EXPORT_HPP
