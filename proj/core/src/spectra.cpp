#include "cayley/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "cayley/bounds.hpp"
#include "cayley/characters.hpp"
#include "cayley/eigensolver.hpp"
#include "cayley/errors.hpp"

namespace cayley {

double SpectrumOptions::cluster_gap(std::size_t set_size) const {
  return std::max(tol, 1e-9 * static_cast<double>(set_size));
}

double SpectrumOptions::snap_tolerance(std::size_t set_size) const {
  return tol * std::max(1.0, static_cast<double>(set_size) / 100.0);
}

Spectrum Spectrum::from_values(std::vector<double> values, double gap,
                               double snap_tol) {
  std::sort(values.begin(), values.end(), std::greater<>());
  Spectrum out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j - 1] - values[j] < gap) sum += values[j++];
    SpectrumEntry e;
    e.raw = sum / static_cast<double>(j - i);
    e.multiplicity = j - i;
    const double nearest = std::round(e.raw);
    e.snapped = std::abs(e.raw - nearest) <= snap_tol;
    e.value = e.snapped ? nearest : e.raw;
    out.entries.push_back(e);
    i = j;
  }
  return out;
}

Spectrum Spectrum::merge(std::vector<SpectrumEntry> items, double gap) {
  std::stable_sort(items.begin(), items.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) {
                     return a.value > b.value;
                   });
  Spectrum out;
  for (const SpectrumEntry& item : items) {
    if (!out.entries.empty() && out.entries.back().value - item.value < gap) {
      SpectrumEntry& last = out.entries.back();
      const double total = static_cast<double>(last.multiplicity + item.multiplicity);
      last.raw = (last.raw * static_cast<double>(last.multiplicity) +
                  item.raw * static_cast<double>(item.multiplicity)) /
                 total;
      last.multiplicity += item.multiplicity;
      if (item.snapped || item.exact) {
        if (!(last.snapped || last.exact)) last.value = item.value;
        last.snapped = last.snapped || item.snapped;
        last.exact = last.exact || item.exact;
      } else if (!(last.snapped || last.exact)) {
        last.value = last.raw;
      }
      continue;
    }
    out.entries.push_back(item);
  }
  return out;
}

std::uint64_t Spectrum::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

double Spectrum::value_sum() const {
  double total = 0.0;
  for (const auto& e : entries) total += e.value * static_cast<double>(e.multiplicity);
  return total;
}

std::uint64_t Spectrum::multiplicity_of(double value, double tol) const {
  for (const auto& e : entries) {
    if (std::abs(e.value - value) <= tol) return e.multiplicity;
  }
  return 0;
}

double Spectrum::largest() const {
  if (entries.empty()) throw Error("empty spectrum");
  return entries.front().value;
}

double Spectrum::smallest() const {
  if (entries.empty()) throw Error("empty spectrum");
  return entries.back().value;
}

double Spectrum::at_level(std::uint64_t level) const {
  std::uint64_t seen = 0;
  for (const auto& e : entries) {
    seen += e.multiplicity;
    if (seen >= level) return e.value;
  }
  throw ParameterError("spectrum has fewer than " + std::to_string(level) +
                       " eigenvalues");
}

namespace {

bool is_full_class(const ConnectionSet& h, Partition& cycle_class) {
  if (h.empty()) return false;
  cycle_class = cycle_type(h.elements().front());
  for (const Permutation& p : h) {
    if (cycle_type(p) != cycle_class) return false;
  }
  return Integer(h.size()) == class_size(cycle_class);
}

Spectrum exact_scalar(const Rational& value, std::uint64_t dim) {
  SpectrumEntry e;
  e.value = e.raw = to_double(value);
  e.multiplicity = dim;
  e.exact = true;
  e.snapped = is_integer(value);
  return Spectrum{{e}};
}

void bound_skipped_block(IrrepBlock& block, const ConnectionSet& h,
                         const SpectrumOptions& options) {
  // H = (H fixing n) + (the rest). The first part restricts to S_{n-1} and
  // splits along branch_down; each element of the rest is orthogonal, so its
  // contribution is bounded by the count in either direction.
  const int n = h.degree();
  const ConnectionSet slice = relabel_to_subgroup(stabilizer_slice(h, n), n);
  const double rest = static_cast<double>(h.size() - slice.size());
  double top = 0.0;
  double bottom = 0.0;
  bool first = true;
  for (const Partition& lower : branch_down(block.shape)) {
    double hi = 0.0, lo = 0.0;
    if (!slice.empty()) {
      IrrepBlock sub = irrep_spectrum(lower, slice, options);
      hi = sub.skipped ? sub.upper_bound : sub.spectrum.largest();
      lo = sub.skipped ? sub.lower_bound : sub.spectrum.smallest();
    }
    top = first ? hi : std::max(top, hi);
    bottom = first ? lo : std::min(bottom, lo);
    first = false;
  }
  block.upper_bound = top + rest;
  block.lower_bound = bottom - rest;
}

}  // namespace

IrrepBlock irrep_spectrum(const Partition& shape, const ConnectionSet& h,
                          const SpectrumOptions& options) {
  if (shape.n() != h.degree()) {
    throw ParameterError("irrep_spectrum: shape and connection set degree differ");
  }
  IrrepBlock block;
  block.shape = shape;
  block.dimension = irrep_dimension(shape);
  const ShapeClass kind = classify_shape(shape);

  if (kind == ShapeClass::trivial) {
    block.method = "trivial";
    block.spectrum = exact_scalar(Rational(h.size()), 1);
    return block;
  }
  if (kind == ShapeClass::sign) {
    std::int64_t total = 0;
    for (const Permutation& p : h) total += p.sign();
    block.method = "sign";
    block.spectrum = exact_scalar(Rational(total), 1);
    return block;
  }
  if (Partition cls; is_full_class(h, cls)) {
    block.method = "class_sum";
    block.spectrum = exact_scalar(class_sum_eigenvalue(shape, cls), block.dimension);
    return block;
  }
  if (h.empty()) {
    block.method = "numeric";
    block.spectrum = exact_scalar(Rational(0), block.dimension);
    return block;
  }
  try {
    const IrrepEvaluator ev(shape, options.dim_cap);
    const Eigen::MatrixXd sum = ev.sum_over_set(h, options.workers);
    block.method = "numeric";
    block.spectrum =
        Spectrum::from_values(sym_eigenvalues(sum), options.cluster_gap(h.size()),
                              options.snap_tolerance(h.size()));
  } catch (const CapExceeded&) {
    block.method = "skipped";
    block.skipped = true;
    bound_skipped_block(block, h, options);
  }
  return block;
}

GraphSpectrum assemble_graph_spectrum(const ConnectionSet& h,
                                      const SpectrumOptions& options) {
  const int n = h.degree();
  if (n < 1 || n > kMaxEvaluatorN) {
    throw ParameterError("assemble_graph_spectrum: n must lie in [1, 8]");
  }
  GraphSpectrum graph;
  graph.n = n;
  graph.label = h.label();
  graph.degree = h.size();

  const std::vector<Partition> shapes = enumerate_partitions(n);
  graph.blocks.resize(shapes.size());
  SpectrumOptions inner = options;
  inner.workers = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < shapes.size(); i = next++) {
      graph.blocks[i] = irrep_spectrum(shapes[i], h, inner);
    }
  };
  const auto threads = static_cast<std::size_t>(
      std::clamp<int>(options.workers, 1, static_cast<int>(shapes.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<SpectrumEntry> items;
  for (const IrrepBlock& block : graph.blocks) {
    if (block.skipped) {
      graph.partial = true;
      continue;
    }
    for (SpectrumEntry e : block.spectrum.entries) {
      e.multiplicity *= block.dimension;
      items.push_back(e);
    }
  }
  graph.spectrum = Spectrum::merge(std::move(items), options.cluster_gap(h.size()));
  return graph;
}

EigenvalueMultiplicity strictly_second_largest(const Spectrum& spectrum,
                                               std::uint64_t degree,
                                               int component_count,
                                               double tol) {
  if (spectrum.entries.size() < 2) {
    throw Error("strictly_second_largest: spectrum has a single distinct value");
  }
  const SpectrumEntry& top = spectrum.entries.front();
  if (std::abs(top.value - static_cast<double>(degree)) > tol) {
    throw NumericalError("largest eigenvalue " + std::to_string(top.value) +
                         " is not the degree " + std::to_string(degree));
  }
  if (top.multiplicity != static_cast<std::uint64_t>(component_count)) {
    throw NumericalError("degree multiplicity " + std::to_string(top.multiplicity) +
                         " differs from component count " +
                         std::to_string(component_count));
  }
  const SpectrumEntry& second = spectrum.entries[1];
  return {second.value, second.multiplicity};
}

std::pair<EigenvalueMultiplicity, EigenvalueMultiplicity> extreme_eigenvalues(
    const Spectrum& spectrum) {
  if (spectrum.entries.size() < 2) {
    throw Error("extreme_eigenvalues: spectrum has a single distinct value");
  }
  const auto& last = spectrum.entries[spectrum.entries.size() - 1];
  const auto& before = spectrum.entries[spectrum.entries.size() - 2];
  return {{last.value, last.multiplicity}, {before.value, before.multiplicity}};
}

std::vector<Partition> attaining_partitions(const GraphSpectrum& graph,
                                            double target, double tol) {
  std::vector<Partition> out;
  for (const IrrepBlock& block : graph.blocks) {
    if (!block.skipped && block.spectrum.contains(target, tol)) {
      out.push_back(block.shape);
    }
  }
  return out;
}

int expected_component_count(int k) { return k % 2 == 0 ? 1 : 2; }

AldousReport aldous_from_spectrum(const GraphSpectrum& graph, int k, int r,
                                  const SpectrumOptions& options) {
  const int n = graph.n;
  const double tol = options.snap_tolerance(graph.degree);
  AldousReport report;
  report.n = n;
  report.k = k;
  report.r = r;
  report.degree = graph.degree;
  report.component_count = expected_component_count(k);
  report.alpha2 = strictly_second_largest(graph.spectrum, graph.degree,
                                          report.component_count, tol);
  report.mu2 = mu2(n, k, r);
  const Partition standard({n - 1, 1});
  for (const IrrepBlock& block : graph.blocks) {
    if (block.shape == standard) report.standard_lambda1 = block.spectrum.largest();
  }
  report.attaining = attaining_partitions(graph, report.alpha2.value, tol);
  report.verdict = std::abs(report.alpha2.value - report.standard_lambda1) <= tol;
  report.standard_unique =
      report.attaining.size() == 1 && report.attaining.front() == standard;
  if (graph.partial) {
    for (const IrrepBlock& block : graph.blocks) {
      if (block.skipped && block.upper_bound >= report.alpha2.value - tol) {
        throw CapExceeded("block " + block.shape.to_string() +
                          " was skipped and its bound does not rule out alpha2");
      }
    }
    report.certified_by_bounds = true;
  }
  return report;
}

AldousReport aldous_check(int n, int k, int r, const SpectrumOptions& options,
                          GraphSpectrum* graph_out) {
  if (!(1 <= r && r < k && k < n && n <= kMaxEvaluatorN)) {
    throw ParameterError("aldous_check requires 1 <= r < k < n <= 8");
  }
  GraphSpectrum graph = assemble_graph_spectrum(enum_cycles(n, k, r), options);
  AldousReport report = aldous_from_spectrum(graph, k, r, options);
  if (graph_out != nullptr) *graph_out = std::move(graph);
  return report;
}

}  // namespace cayley
