#pragma once

#include <string>
#include <vector>

#include "cayley/bounds.hpp"
#include "cayley/spectra.hpp"

namespace cayley {

/// Version of the structured (JSON) report layout.
inline constexpr int kReportSchemaVersion = 1;

/// Integers print without a fractional part; other values with 10
/// significant digits.
std::string format_value(double value);

std::string render_spectrum_text(const GraphSpectrum& graph,
                                 const AldousReport* aldous = nullptr);
std::string render_spectrum_json(const GraphSpectrum& graph,
                                 const AldousReport* aldous = nullptr);
/// partition,dimension,eigenvalue,block_multiplicity,graph_multiplicity,snapped
std::string render_spectrum_csv(const GraphSpectrum& graph);

std::string render_aldous_text(const AldousReport& report);
std::string render_aldous_json(const AldousReport& report);

std::string render_certificates(const std::vector<BoundCertificate>& certificates);

}  // namespace cayley
