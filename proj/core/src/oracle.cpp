#include "cayley/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <thread>

#include "cayley/eigensolver.hpp"
#include "cayley/errors.hpp"

namespace cayley {

GraphInstance build_graph(const ConnectionSet& h, int workers) {
  const int n = h.degree();
  if (n < 1 || n > kMaxOracleStructureN) {
    throw CapExceeded("build_graph: n = " + std::to_string(n) + " exceeds the oracle cap");
  }
  GraphInstance g;
  g.n = n;
  g.degree = h.size();
  g.vertices = all_permutations(n);
  const std::size_t count = g.vertices.size();
  const std::size_t d = h.size();
  g.offsets.resize(count + 1);
  for (std::size_t v = 0; v <= count; ++v) g.offsets[v] = static_cast<std::uint32_t>(v * d);
  g.targets.resize(count * d);

  auto fill = [&](std::size_t first, std::size_t stride) {
    for (std::size_t v = first; v < count; v += stride) {
      std::size_t slot = v * d;
      for (const Permutation& s : h) {
        g.targets[slot++] = static_cast<std::uint32_t>((g.vertices[v] * s).rank());
      }
      std::sort(g.targets.begin() + static_cast<std::ptrdiff_t>(v * d),
                g.targets.begin() + static_cast<std::ptrdiff_t>(slot));
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1) {
    fill(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(fill, t, threads);
  }
  return g;
}

Eigen::MatrixXd dense_adjacency(const GraphInstance& g) {
  const auto count = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(count, count);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t w : g.neighbours(v)) a(static_cast<Eigen::Index>(v), w) += 1.0;
  }
  return a;
}

Spectrum brute_spectrum(const GraphInstance& g, const SpectrumOptions& options) {
  if (g.n > kMaxOracleSpectrumN) {
    throw CapExceeded("brute_spectrum: dense eigensolve capped at 720 vertices");
  }
  const auto size = static_cast<std::size_t>(g.degree);
  return Spectrum::from_values(sym_eigenvalues(dense_adjacency(g)),
                               options.cluster_gap(size), options.snap_tolerance(size));
}

StructureReport structure_check(const GraphInstance& g) {
  const std::size_t count = g.vertex_count();
  std::vector<int> colour(count, -1);
  StructureReport report;
  report.bipartite = true;
  std::queue<std::size_t> frontier;
  for (std::size_t start = 0; start < count; ++start) {
    if (colour[start] >= 0) continue;
    ++report.components;
    colour[start] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      for (std::uint32_t w : g.neighbours(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          frontier.push(w);
        } else if (colour[w] == colour[v]) {
          report.bipartite = false;
        }
      }
    }
  }
  return report;
}

IntMatrix equitable_quotient(const GraphInstance& g, int i) {
  const int n = g.n;
  if (i < 1 || i > n) throw ParameterError("equitable_quotient: point out of range");
  auto cell = [&](std::size_t v) { return g.vertices[v].inverse()(i) - 1; };
  IntMatrix quotient = IntMatrix::Constant(n, n, -1);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint32_t w : g.neighbours(v)) ++counts[static_cast<std::size_t>(cell(w))];
    const int a = cell(v);
    for (int b = 0; b < n; ++b) {
      std::int64_t& entry = quotient(a, b);
      const std::int64_t c = counts[static_cast<std::size_t>(b)];
      if (entry < 0) {
        entry = c;
      } else if (entry != c) {
        throw NumericalError("partition by sigma^-1(" + std::to_string(i) +
                             ") is not equitable");
      }
    }
  }
  return quotient;
}

SpectrumComparison compare_spectra(const Spectrum& brute,
                                   const GraphSpectrum& assembled, double tol) {
  SpectrumComparison out;
  auto record = [&](double value, std::uint64_t b, std::uint64_t a) {
    SpectrumMismatch m{value, b, a, {}};
    m.shapes = attaining_partitions(assembled, value, tol);
    out.mismatches.push_back(std::move(m));
  };
  for (const SpectrumEntry& e : brute.entries) {
    const std::uint64_t other = assembled.spectrum.multiplicity_of(e.value, tol);
    if (other != e.multiplicity) record(e.value, e.multiplicity, other);
  }
  for (const SpectrumEntry& e : assembled.spectrum.entries) {
    if (!brute.contains(e.value, tol)) record(e.value, 0, e.multiplicity);
  }
  out.equal = out.mismatches.empty() &&
              brute.total_multiplicity() == assembled.spectrum.total_multiplicity();
  return out;
}

std::string export_edge_list(const GraphInstance& g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t w : g.neighbours(v)) {
      if (v < w) out << v << ' ' << w << '\n';
    }
  }
  return out.str();
}

}  // namespace cayley
