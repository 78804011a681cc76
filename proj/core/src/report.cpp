#include "cayley/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace cayley {

namespace {

using nlohmann::ordered_json;

std::string join_shapes(const std::vector<Partition>& shapes) {
  std::string out;
  for (const Partition& p : shapes) {
    if (!out.empty()) out += " ";
    out += "(" + p.to_string() + ")";
  }
  return out.empty() ? "-" : out;
}

ordered_json value_json(double v) {
  if (std::isfinite(v) && v == std::round(v) && std::abs(v) < 9e15) {
    return static_cast<std::int64_t>(v);
  }
  return format_value(v);
}

ordered_json entries_json(const Spectrum& s) {
  ordered_json out = ordered_json::array();
  for (const SpectrumEntry& e : s.entries) {
    out.push_back({{"value", value_json(e.value)},
                   {"raw", format_value(e.raw)},
                   {"multiplicity", e.multiplicity},
                   {"snapped", e.snapped},
                   {"exact", e.exact}});
  }
  return out;
}

ordered_json aldous_json(const AldousReport& a) {
  std::vector<std::string> shapes;
  for (const Partition& p : a.attaining) shapes.push_back(p.to_string());
  return {{"n", a.n},
          {"k", a.k},
          {"r", a.r},
          {"degree", a.degree},
          {"component_count", a.component_count},
          {"alpha2", value_json(a.alpha2.value)},
          {"alpha2_multiplicity", a.alpha2.multiplicity},
          {"mu2", to_string(a.mu2)},
          {"standard_lambda1", value_json(a.standard_lambda1)},
          {"attaining", shapes},
          {"standard_unique", a.standard_unique},
          {"certified_by_bounds", a.certified_by_bounds},
          {"verdict", a.verdict}};
}

}  // namespace

std::string format_value(double value) {
  if (std::isfinite(value) && value == std::round(value) && std::abs(value) < 9e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

std::string render_spectrum_text(const GraphSpectrum& graph, const AldousReport* aldous) {
  std::ostringstream out;
  out << "graph: Cay(S_" << graph.n << ", " << graph.label << ")\n";
  out << "degree: " << graph.degree << "\n";
  for (const IrrepBlock& b : graph.blocks) {
    out << "block (" << b.shape.to_string() << ") dim " << b.dimension << " [" << b.method
        << "]:";
    if (b.skipped) {
      out << " skipped, eigenvalues in [" << format_value(b.lower_bound) << ", "
          << format_value(b.upper_bound) << "]\n";
      continue;
    }
    for (const SpectrumEntry& e : b.spectrum.entries) {
      out << " " << format_value(e.value) << " x" << e.multiplicity;
    }
    out << "\n";
  }
  out << "spectrum:";
  for (const SpectrumEntry& e : graph.spectrum.entries) {
    out << " " << format_value(e.value) << " x" << e.multiplicity;
  }
  out << "\n";
  out << "total multiplicity: " << graph.spectrum.total_multiplicity()
      << (graph.partial ? " (partial: skipped blocks)" : "") << "\n";
  if (aldous != nullptr) out << render_aldous_text(*aldous);
  return out.str();
}

std::string render_spectrum_json(const GraphSpectrum& graph, const AldousReport* aldous) {
  ordered_json blocks = ordered_json::array();
  for (const IrrepBlock& b : graph.blocks) {
    ordered_json block = {{"partition", b.shape.to_string()},
                          {"dimension", b.dimension},
                          {"method", b.method},
                          {"skipped", b.skipped}};
    if (b.skipped) {
      block["upper_bound"] = value_json(b.upper_bound);
      block["lower_bound"] = value_json(b.lower_bound);
    } else {
      block["eigenvalues"] = entries_json(b.spectrum);
    }
    blocks.push_back(std::move(block));
  }
  ordered_json doc = {{"schema_version", kReportSchemaVersion},
                      {"graph", {{"n", graph.n}, {"connection_set", graph.label}}},
                      {"degree", graph.degree},
                      {"partial", graph.partial},
                      {"blocks", blocks},
                      {"spectrum", entries_json(graph.spectrum)},
                      {"total_multiplicity", graph.spectrum.total_multiplicity()}};
  if (aldous != nullptr) doc["aldous"] = aldous_json(*aldous);
  return doc.dump(2) + "\n";
}

std::string render_spectrum_csv(const GraphSpectrum& graph) {
  std::ostringstream out;
  out << "partition,dimension,eigenvalue,block_multiplicity,graph_multiplicity,snapped\n";
  for (const IrrepBlock& b : graph.blocks) {
    if (b.skipped) continue;
    for (const SpectrumEntry& e : b.spectrum.entries) {
      out << '"' << b.shape.to_string() << "\"," << b.dimension << ','
          << format_value(e.value) << ',' << e.multiplicity << ','
          << e.multiplicity * b.dimension << ',' << (e.snapped ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

std::string render_aldous_text(const AldousReport& a) {
  std::ostringstream out;
  out << "parameters: n=" << a.n << " k=" << a.k << " r=" << a.r << "\n";
  out << "degree: " << a.degree << "\n";
  out << "components: " << a.component_count << "\n";
  out << "alpha2: " << format_value(a.alpha2.value) << " multiplicity "
      << a.alpha2.multiplicity << "\n";
  out << "attained by: " << join_shapes(a.attaining) << "\n";
  out << "mu2: " << to_string(a.mu2) << "\n";
  out << "standard lambda1: " << format_value(a.standard_lambda1) << "\n";
  out << "standard unique: " << (a.standard_unique ? "yes" : "no") << "\n";
  if (a.certified_by_bounds) out << "note: skipped blocks ruled out by bounds\n";
  out << "aldous: " << (a.verdict ? "true" : "false") << "\n";
  return out.str();
}

std::string render_aldous_json(const AldousReport& a) {
  ordered_json doc = {{"schema_version", kReportSchemaVersion}, {"aldous", aldous_json(a)}};
  return doc.dump(2) + "\n";
}

std::string render_certificates(const std::vector<BoundCertificate>& certificates) {
  std::string out;
  for (const BoundCertificate& c : certificates) out += to_log_line(c) + "\n";
  return out;
}

}  // namespace cayley
