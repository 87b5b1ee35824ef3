#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cmcb/bifurcation.hpp"
#include "cmcb/spectrum.hpp"

namespace cmcb {

using ordered_json = nlohmann::ordered_json;

/// Shortest round-trip decimal representation.
std::string format_double(double v);

/// Writes through a temp file in the same directory and renames into
/// place. Creates parent directories.
void write_file_atomic(const std::string& path, const std::string& content);

/// Distinct nonzero eigenvalues <= bound for the level columns; explicit
/// spectra fall back to their supplied entries when the bound exceeds the
/// data.
std::vector<SpectralLine> levels_for(const FiberSpectrum& spec, double bound);

/// CSV with header r,h,alpha_sq,morse_index plus one constant
/// level_<value> column per supplied eigenvalue level.
std::string scan_csv(const std::vector<ScanSample>& samples,
                     const std::vector<SpectralLine>& levels);

std::string index_csv(const std::vector<ScanSample>& samples);
std::string spectrum_csv(const std::vector<SpectralLine>& lines);

ordered_json crossing_to_json(const CrossingEvent& event);
ordered_json touch_to_json(const TouchEvent& touch);
ordered_json certificate_to_json(const RigidityCertificate& cert);

ordered_json crossings_json(const std::vector<CrossingEvent>& events,
                            const std::vector<TouchEvent>& touches,
                            const std::string& status);
ordered_json certificates_json(const std::vector<RigidityCertificate>& certs,
                               const std::vector<std::string>& errors,
                               const std::string& status);
ordered_json report_json(const BifurcationReport& report,
                         const std::string& status);

/// Canonical serialization used for every JSON artifact (2-space indent,
/// trailing newline); re-reading and re-dumping is byte-stable.
std::string dump_json(const ordered_json& j);

}  // namespace cmcb
