#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cayley/permgroup.hpp"
#include "cayley/spectra.hpp"

namespace cayley {

inline constexpr int kMaxOracleSpectrumN = 6;
inline constexpr int kMaxOracleStructureN = 7;

/// Cay(S_n, H) with vertices in lexicographic one-line order (vertex index =
/// rank) and g adjacent to g*h. Adjacency is stored row-compressed.
struct GraphInstance {
  int n = 0;
  std::uint64_t degree = 0;
  std::vector<Permutation> vertices;
  std::vector<std::uint32_t> offsets;  // size vertices + 1
  std::vector<std::uint32_t> targets;

  std::size_t vertex_count() const { return vertices.size(); }
  std::span<const std::uint32_t> neighbours(std::size_t v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
};

/// Requires n <= 7. Rows are filled in parallel across workers.
GraphInstance build_graph(const ConnectionSet& h, int workers = 1);

Eigen::MatrixXd dense_adjacency(const GraphInstance& g);

/// Dense eigensolve of the adjacency matrix; at most 720 vertices.
Spectrum brute_spectrum(const GraphInstance& g, const SpectrumOptions& options = {});

struct StructureReport {
  int components = 0;
  bool bipartite = false;
};

/// BFS component count and 2-colouring.
StructureReport structure_check(const GraphInstance& g);

/// Quotient of the partition by sigma^-1(i): entry [a][b] counts neighbours in
/// cell b of any vertex in cell a. Throws NumericalError if not equitable.
IntMatrix equitable_quotient(const GraphInstance& g, int i);

struct SpectrumMismatch {
  double value = 0.0;
  std::uint64_t brute_multiplicity = 0;
  std::uint64_t assembled_multiplicity = 0;
  std::vector<Partition> shapes;  // blocks of the assembled side holding value
};

struct SpectrumComparison {
  bool equal = false;
  std::vector<SpectrumMismatch> mismatches;
};

/// Multiset equality of the brute-force and assembled spectra.
SpectrumComparison compare_spectra(const Spectrum& brute,
                                   const GraphSpectrum& assembled, double tol);

/// "u v" per undirected edge with u < v, one per line.
std::string export_edge_list(const GraphInstance& g);

}  // namespace cayley
