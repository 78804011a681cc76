#include "cayleyspec/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cayley/bounds.hpp"
#include "cayley/errors.hpp"
#include "cayley/oracle.hpp"
#include "cayley/report.hpp"
#include "cayley/spectra.hpp"
#include "cayleyspec/suites.hpp"

namespace cayleyspec {

using namespace cayley;
using nlohmann::ordered_json;

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

SpectrumOptions options_from(const RunConfig& cfg) {
  SpectrumOptions o;
  o.tol = cfg.tol;
  o.dim_cap = cfg.dim_cap;
  o.workers = cfg.workers;
  return o;
}

void validate_common(const RunConfig& cfg) {
  require(cfg.tol > 0 && cfg.tol < 1, "--tol must lie in (0, 1)");
  require(cfg.dim_cap >= 1, "--dim-cap must be positive");
  require(cfg.workers >= 1 && cfg.workers <= 256, "--workers must lie in [1, 256]");
  require(cfg.output == "text" || cfg.output == "structured" || cfg.output == "csv",
          "--output must be text, structured or csv");
  require(cfg.mode == "irrep" || cfg.mode == "full" || cfg.mode == "oracle",
          "--mode must be irrep, full or oracle");
}

void validate_set(const RunConfig& cfg, int n_cap) {
  require(cfg.n >= 2 && cfg.n <= n_cap,
          "--n must lie in [2, " + std::to_string(n_cap) + "]");
  require(cfg.k >= 2 && cfg.k <= cfg.n, "--k must lie in [2, n]");
  require(cfg.r >= 0 && cfg.r < cfg.k, "--r must lie in [0, k)");
}

bool aldous_range(int n, int k, int r) { return 1 <= r && r < k && k < n; }

std::string shapes_text(const std::vector<Partition>& shapes) {
  std::string out;
  for (const Partition& p : shapes) out += (out.empty() ? "" : " ") + ("(" + p.to_string() + ")");
  return out.empty() ? "-" : out;
}

std::vector<std::string> shapes_list(const std::vector<Partition>& shapes) {
  std::vector<std::string> out;
  for (const Partition& p : shapes) out.push_back(p.to_string());
  return out;
}

std::string spectrum_csv(const Spectrum& s) {
  std::string out = "eigenvalue,multiplicity,snapped\n";
  for (const auto& e : s.entries) {
    out += format_value(e.value) + "," + std::to_string(e.multiplicity) + "," +
           (e.snapped ? "true" : "false") + "\n";
  }
  return out;
}

ordered_json spectrum_json(const Spectrum& s) {
  ordered_json out = ordered_json::array();
  for (const auto& e : s.entries) {
    out.push_back({{"value", format_value(e.value)},
                   {"raw", format_value(e.raw)},
                   {"multiplicity", e.multiplicity},
                   {"snapped", e.snapped}});
  }
  return out;
}

struct OracleRun {
  StructureReport structure;
  Spectrum brute;
  GraphSpectrum assembled;
  SpectrumComparison comparison;
};

OracleRun run_oracle(const RunConfig& cfg) {
  const SpectrumOptions options = options_from(cfg);
  const ConnectionSet h = enum_cycles(cfg.n, cfg.k, cfg.r);
  const GraphInstance g = build_graph(h, cfg.workers);
  OracleRun run;
  run.structure = structure_check(g);
  run.brute = brute_spectrum(g, options);
  run.assembled = assemble_graph_spectrum(h, options);
  run.comparison = compare_spectra(run.brute, run.assembled, options.snap_tolerance(h.size()));
  return run;
}

std::string render_oracle(const RunConfig& cfg, const OracleRun& run) {
  if (cfg.output == "csv") return spectrum_csv(run.brute);
  if (cfg.output == "structured") {
    ordered_json mismatches = ordered_json::array();
    for (const auto& m : run.comparison.mismatches) {
      mismatches.push_back({{"value", format_value(m.value)},
                            {"brute_multiplicity", m.brute_multiplicity},
                            {"assembled_multiplicity", m.assembled_multiplicity},
                            {"shapes", shapes_list(m.shapes)}});
    }
    ordered_json doc = {
        {"schema_version", kReportSchemaVersion},
        {"mode", "oracle"},
        {"graph", {{"n", cfg.n}, {"connection_set", run.assembled.label}}},
        {"degree", run.assembled.degree},
        {"components", run.structure.components},
        {"bipartite", run.structure.bipartite},
        {"spectrum", spectrum_json(run.brute)},
        {"total_multiplicity", run.brute.total_multiplicity()},
        {"matches_irrep", run.comparison.equal},
        {"mismatches", mismatches}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "graph: Cay(S_" << cfg.n << ", " << run.assembled.label << ") [oracle]\n";
  out << "degree: " << run.assembled.degree << "\n";
  out << "components: " << run.structure.components << "\n";
  out << "bipartite: " << (run.structure.bipartite ? "yes" : "no") << "\n";
  out << "eigenvalues: " << run.brute.total_multiplicity() << "\n";
  out << "spectrum:";
  for (const auto& e : run.brute.entries) out << " " << format_value(e.value) << " x" << e.multiplicity;
  out << "\n";
  for (const auto& m : run.comparison.mismatches) {
    out << "mismatch: value " << format_value(m.value) << " oracle x" << m.brute_multiplicity
        << " assembled x" << m.assembled_multiplicity << " shapes " << shapes_text(m.shapes)
        << "\n";
  }
  out << "matches irrep assembly: " << (run.comparison.equal ? "yes" : "no") << "\n";
  return out.str();
}

std::string aldous_csv(const AldousReport& a) {
  return "n,k,r,degree,components,alpha2,alpha2_multiplicity,mu2,attaining,verdict\n" +
         std::to_string(a.n) + "," + std::to_string(a.k) + "," + std::to_string(a.r) + "," +
         std::to_string(a.degree) + "," + std::to_string(a.component_count) + "," +
         format_value(a.alpha2.value) + "," + std::to_string(a.alpha2.multiplicity) + "," +
         to_string(a.mu2) + ",\"" + shapes_text(a.attaining) + "\"," +
         (a.verdict ? "true" : "false") + "\n";
}

}  // namespace

CommandResult cmd_spectrum(const RunConfig& cfg) {
  validate_common(cfg);
  if (cfg.mode == "oracle") {
    validate_set(cfg, kMaxOracleSpectrumN);
    const OracleRun run = run_oracle(cfg);
    return {run.comparison.equal ? kExitOk : kExitVerdictFalse, render_oracle(cfg, run)};
  }
  validate_set(cfg, kMaxEvaluatorN);
  const SpectrumOptions options = options_from(cfg);
  const GraphSpectrum graph = assemble_graph_spectrum(enum_cycles(cfg.n, cfg.k, cfg.r), options);
  std::optional<AldousReport> aldous;
  if (aldous_range(cfg.n, cfg.k, cfg.r)) {
    try {
      aldous = aldous_from_spectrum(graph, cfg.k, cfg.r, options);
    } catch (const CapExceeded&) {
      // Skipped blocks whose bounds do not settle alpha2: report blocks only.
    }
  }
  CommandResult result;
  const AldousReport* a = aldous ? &*aldous : nullptr;
  if (cfg.output == "csv") {
    result.output = render_spectrum_csv(graph);
  } else if (cfg.output == "structured") {
    result.output = render_spectrum_json(graph, a);
  } else {
    result.output = render_spectrum_text(graph, a);
  }
  if (graph.partial && cfg.mode == "full") result.exit_code = kExitPartial;
  return result;
}

CommandResult cmd_aldous(const RunConfig& cfg) {
  validate_common(cfg);
  require(aldous_range(cfg.n, cfg.k, cfg.r) && cfg.n <= kMaxEvaluatorN,
          "aldous requires 1 <= r < k < n <= 8");
  const AldousReport a = aldous_check(cfg.n, cfg.k, cfg.r, options_from(cfg));
  CommandResult result;
  result.exit_code = a.verdict ? kExitOk : kExitVerdictFalse;
  if (cfg.output == "csv") {
    result.output = aldous_csv(a);
  } else if (cfg.output == "structured") {
    result.output = render_aldous_json(a);
  } else {
    result.output = render_aldous_text(a);
  }
  return result;
}

namespace {

struct Table1Row {
  Table1Prediction predicted;
  AldousReport computed;
  bool match = false;
  std::string verdict;  // match, MISMATCH, computed-only
};

bool contains_all(const std::vector<Partition>& big, const std::vector<Partition>& small) {
  return std::all_of(small.begin(), small.end(), [&](const Partition& p) {
    return std::find(big.begin(), big.end(), p) != big.end();
  });
}

Table1Row table1_row(int n, int r, const SpectrumOptions& options) {
  Table1Row row{table1_prediction(n, r), aldous_check(n, n - 1, r, options)};
  if (row.predicted.small_case) {
    row.match = true;
    row.verdict = "computed-only";
    return row;
  }
  const auto& p = row.predicted;
  const auto& c = row.computed;
  std::vector<Partition> allowed = p.required;
  allowed.insert(allowed.end(), p.optional.begin(), p.optional.end());
  row.match = std::abs(c.alpha2.value - to_double(p.value)) <= options.snap_tolerance(c.degree) &&
              contains_all(c.attaining, p.required) && contains_all(allowed, c.attaining) &&
              (!p.multiplicity || *p.multiplicity == c.alpha2.multiplicity);
  row.verdict = row.match ? "match" : "MISMATCH";
  return row;
}

}  // namespace

CommandResult cmd_table1(const RunConfig& cfg) {
  validate_common(cfg);
  const int n = cfg.n == 0 ? 7 : cfg.n;
  require(n >= 5 && n <= kMaxEvaluatorN, "table1 requires 5 <= n <= 8");
  const SpectrumOptions options = options_from(cfg);
  std::vector<Table1Row> rows;
  for (int r = 1; r <= n - 2; ++r) rows.push_back(table1_row(n, r, options));
  const bool all_match =
      std::all_of(rows.begin(), rows.end(), [](const Table1Row& row) { return row.match; });

  auto predicted_shapes = [](const Table1Prediction& p) {
    std::string s = shapes_text(p.required);
    if (!p.optional.empty()) s += " [maybe " + shapes_text(p.optional) + "]";
    return s;
  };
  auto predicted_mult = [](const Table1Prediction& p) {
    if (p.small_case) return std::string("-");
    return p.multiplicity ? std::to_string(*p.multiplicity) : std::string("unknown");
  };

  CommandResult result;
  result.exit_code = all_match ? kExitOk : kExitVerdictFalse;
  if (cfg.output == "structured") {
    ordered_json out = ordered_json::array();
    for (const auto& row : rows) {
      const auto& p = row.predicted;
      out.push_back({{"r", p.r},
                     {"cell", p.cell},
                     {"small_case", p.small_case},
                     {"predicted_value", p.small_case ? "-" : to_string(p.value)},
                     {"predicted_partitions", shapes_list(p.required)},
                     {"possible_partitions", shapes_list(p.optional)},
                     {"predicted_multiplicity", predicted_mult(p)},
                     {"alpha2", format_value(row.computed.alpha2.value)},
                     {"multiplicity", row.computed.alpha2.multiplicity},
                     {"partitions", shapes_list(row.computed.attaining)},
                     {"aldous", row.computed.verdict},
                     {"verdict", row.verdict}});
    }
    ordered_json doc = {{"schema_version", kReportSchemaVersion},
                        {"n", n},
                        {"k", n - 1},
                        {"rows", out},
                        {"all_match", all_match}};
    result.output = doc.dump(2) + "\n";
    return result;
  }
  if (cfg.output == "csv") {
    std::string out =
        "r,cell,predicted_value,predicted_partitions,predicted_multiplicity,alpha2,"
        "partitions,multiplicity,verdict\n";
    for (const auto& row : rows) {
      const auto& p = row.predicted;
      out += std::to_string(p.r) + ",\"" + p.cell + "\"," +
             (p.small_case ? "-" : to_string(p.value)) + ",\"" + predicted_shapes(p) + "\"," +
             predicted_mult(p) + "," + format_value(row.computed.alpha2.value) + ",\"" +
             shapes_text(row.computed.attaining) + "\"," +
             std::to_string(row.computed.alpha2.multiplicity) + "," + row.verdict + "\n";
    }
    result.output = out;
    return result;
  }
  std::ostringstream out;
  out << "alpha2 of Cay(S_" << n << ", C(" << n << "," << n - 1 << ";r))\n";
  for (const auto& row : rows) {
    const auto& p = row.predicted;
    out << "r=" << p.r << " [" << p.cell << "]\n";
    out << "  predicted: value " << (p.small_case ? "-" : to_string(p.value)) << ", partitions "
        << (p.small_case ? "-" : predicted_shapes(p)) << ", multiplicity " << predicted_mult(p)
        << "\n";
    out << "  computed:  value " << format_value(row.computed.alpha2.value) << ", partitions "
        << shapes_text(row.computed.attaining) << ", multiplicity "
        << row.computed.alpha2.multiplicity << ", aldous "
        << (row.computed.verdict ? "true" : "false") << "\n";
    out << "  " << row.verdict << "\n";
  }
  if (n < 7) {
    out << "note: the summary table is stated for n >= 7; rows here use the odd-n (n >= 5) "
           "and even-n (n >= 6) theorem statements, and r=1 is a small case computed only.\n";
  }
  result.output = out.str();
  return result;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  validate_common(cfg);
  require(cfg.n_max >= 0 && cfg.n_max <= 60, "--n-max must lie in [0, 60]");
  SuiteLimits limits{cfg.n_max, cfg.n, cfg.workers};
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = suite_names();
  } else {
    require(std::find(suite_names().begin(), suite_names().end(), cfg.suite) !=
                suite_names().end(),
            "unknown suite " + cfg.suite);
    names = {cfg.suite};
  }
  std::ostringstream out;
  bool ok = true;
  for (const std::string& name : names) {
    const SuiteResult s = run_suite(name, limits);
    ok = ok && s.passed();
    out << "suite " << s.name << ": " << s.checks << " checks, " << s.failures << " failures "
        << (s.passed() ? "PASS" : "FAIL") << "\n";
    for (const std::string& m : s.messages) out << "  " << m << "\n";
  }
  return {ok ? kExitOk : kExitVerdictFalse, out.str()};
}

CommandResult cmd_oracle_compare(const RunConfig& cfg) {
  validate_common(cfg);
  validate_set(cfg, kMaxOracleSpectrumN);
  RunConfig oracle = cfg;
  oracle.mode = "oracle";
  const OracleRun run = run_oracle(oracle);
  return {run.comparison.equal ? kExitOk : kExitVerdictFalse, render_oracle(oracle, run)};
}

CommandResult cmd_mu2(const RunConfig& cfg) {
  validate_common(cfg);
  require(aldous_range(cfg.n, cfg.k, cfg.r) && cfg.n <= 200, "mu2 requires 1 <= r < k < n <= 200");
  const Rational value = mu2(cfg.n, cfg.k, cfg.r);
  const bool recurrence_applies = cfg.r <= cfg.k - 2 && cfg.k <= cfg.n - 2;
  std::optional<bool> recurrence;
  if (recurrence_applies) recurrence = mu2_recurrence_holds(cfg.n, cfg.k, cfg.r);
  const auto closed = standard_spectrum_closed_form(cfg.n, cfg.k, cfg.r);

  if (cfg.output == "structured") {
    ordered_json values = ordered_json::array();
    for (const auto& v : closed) {
      ordered_json e = {{"value", to_string(v.value)}};
      if (v.multiplicity) e["multiplicity"] = *v.multiplicity;
      values.push_back(e);
    }
    ordered_json doc = {{"schema_version", kReportSchemaVersion},
                        {"n", cfg.n},
                        {"k", cfg.k},
                        {"r", cfg.r},
                        {"mu2", to_string(value)},
                        {"standard_closed_form", values}};
    if (recurrence) doc["recurrence_holds"] = *recurrence;
    return {kExitOk, doc.dump(2) + "\n"};
  }
  if (cfg.output == "csv") {
    return {kExitOk, "n,k,r,mu2,recurrence\n" + std::to_string(cfg.n) + "," +
                         std::to_string(cfg.k) + "," + std::to_string(cfg.r) + "," +
                         to_string(value) + "," +
                         (recurrence ? (*recurrence ? "true" : "false") : "n/a") + "\n"};
  }
  std::ostringstream out;
  out << "mu2(" << cfg.n << "," << cfg.k << ";" << cfg.r << ") = " << to_string(value) << "\n";
  out << "standard block (closed form):";
  for (const auto& v : closed) {
    out << " " << to_string(v.value);
    if (v.multiplicity) out << " x" << *v.multiplicity;
  }
  out << "\n";
  if (recurrence) out << "recurrence: " << (*recurrence ? "holds" : "FAILS") << "\n";
  return {kExitOk, out.str()};
}

CommandResult run_command(const RunConfig& cfg) {
  CommandResult result;
  try {
    if (cfg.command == "spectrum") {
      result = cmd_spectrum(cfg);
    } else if (cfg.command == "aldous") {
      result = cmd_aldous(cfg);
    } else if (cfg.command == "table1") {
      result = cmd_table1(cfg);
    } else if (cfg.command == "verify") {
      result = cmd_verify(cfg);
    } else if (cfg.command == "oracle-compare") {
      result = cmd_oracle_compare(cfg);
    } else if (cfg.command == "mu2") {
      result = cmd_mu2(cfg);
    } else {
      return {kExitUsage, "unknown command: " + cfg.command + "\n"};
    }
  } catch (const ParameterError& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n"};
  } catch (const CapExceeded& e) {
    return {kExitPartial, std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kExitVerdictFalse, std::string("error: ") + e.what() + "\n"};
  }
  if (!cfg.out_path.empty()) {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) return {kExitUsage, "error: cannot write " + cfg.out_path + "\n"};
    file << result.output;
    result.output.clear();
  }
  return result;
}

}  // namespace cayleyspec
