#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cayley/exact.hpp"
#include "cayley/partitions.hpp"
#include "cayley/permgroup.hpp"
#include "cayley/yor.hpp"

namespace cayley {

/// Numerical knobs shared by every spectral computation.
struct SpectrumOptions {
  double tol = 1e-6;
  std::size_t dim_cap = kDefaultDimCap;
  int workers = 1;

  /// Computed values closer than this belong to one eigenvalue.
  double cluster_gap(std::size_t set_size) const;
  /// Distance to the nearest integer below which a value snaps.
  double snap_tolerance(std::size_t set_size) const;
};

struct SpectrumEntry {
  double value = 0.0;  // the integer when snapped, otherwise equal to raw
  double raw = 0.0;    // cluster mean as computed
  std::uint64_t multiplicity = 0;
  bool snapped = false;
  bool exact = false;  // produced by an exact formula, no eigensolve
};

/// Multiset of eigenvalues, entries strictly decreasing by value.
struct Spectrum {
  std::vector<SpectrumEntry> entries;

  /// Clusters raw eigenvalues and snaps each cluster to an integer when close.
  static Spectrum from_values(std::vector<double> values, double gap,
                              double snap_tol);
  /// Merges entries whose values lie within gap; multiplicities add. A merged
  /// entry is snapped or exact if any contributor was.
  static Spectrum merge(std::vector<SpectrumEntry> items, double gap);

  std::uint64_t total_multiplicity() const;
  /// Sum of value * multiplicity.
  double value_sum() const;
  /// Multiplicity of the entry within tol of value, zero if none.
  std::uint64_t multiplicity_of(double value, double tol) const;
  bool contains(double value, double tol) const {
    return multiplicity_of(value, tol) > 0;
  }
  double largest() const;
  double smallest() const;
  /// The level-th largest eigenvalue counted with multiplicity (1-based).
  double at_level(std::uint64_t level) const;
};

/// One diagonal block of the assembled adjacency: rho_shape(H).
struct IrrepBlock {
  Partition shape;
  std::uint64_t dimension = 0;
  std::string method;  // trivial, sign, class_sum, numeric, skipped
  Spectrum spectrum;   // block multiplicities (sum = dimension)
  bool skipped = false;
  // Weyl bounds on the block when skipped.
  double upper_bound = 0.0;
  double lower_bound = 0.0;
};

/// Eigenvalues of rho_shape(H). The trivial and sign blocks, and full
/// conjugacy classes, are exact; other blocks are eigensolved in Young's
/// orthogonal form. A block above the dimension cap comes back skipped,
/// carrying bounds from its restriction to the point stabilizer.
IrrepBlock irrep_spectrum(const Partition& shape, const ConnectionSet& h,
                          const SpectrumOptions& options = {});

struct GraphSpectrum {
  int n = 0;
  std::string label;
  std::uint64_t degree = 0;
  std::vector<IrrepBlock> blocks;  // enumerate_partitions order
  Spectrum spectrum;               // graph multiplicities
  bool partial = false;            // some block was skipped
};

/// Spectrum of Cay(S_n, H) as the union over shapes of the blocks, each
/// repeated dimension times. Shapes run in parallel across options.workers.
GraphSpectrum assemble_graph_spectrum(const ConnectionSet& h,
                                      const SpectrumOptions& options = {});

struct EigenvalueMultiplicity {
  double value = 0.0;
  std::uint64_t multiplicity = 0;
};

/// lambda_{c+1}: the largest value strictly below the degree. The degree must
/// carry multiplicity component_count.
EigenvalueMultiplicity strictly_second_largest(const Spectrum& spectrum,
                                               std::uint64_t degree,
                                               int component_count,
                                               double tol);

/// Smallest and second smallest distinct values.
std::pair<EigenvalueMultiplicity, EigenvalueMultiplicity> extreme_eigenvalues(
    const Spectrum& spectrum);

/// Shapes whose block contains the target value.
std::vector<Partition> attaining_partitions(const GraphSpectrum& graph,
                                            double target, double tol);

/// 1 when k is even (the k-cycles generate S_n), 2 when k is odd (they
/// generate the alternating group).
int expected_component_count(int k);

struct AldousReport {
  int n = 0, k = 0, r = 0;
  std::uint64_t degree = 0;
  int component_count = 0;
  EigenvalueMultiplicity alpha2;
  Rational mu2;
  double standard_lambda1 = 0.0;  // largest value of the (n-1,1) block
  std::vector<Partition> attaining;
  bool verdict = false;
  /// Whether (n-1,1) is the only attaining shape; reported, never assumed.
  bool standard_unique = false;
  /// Some blocks were skipped; their upper bounds sit below alpha2, so the
  /// verdict stands but alpha2's multiplicity counts computed blocks only.
  bool certified_by_bounds = false;
};

/// Aldous verdict read off an assembled spectrum of Cay(S_n, C(n,k;r)).
/// Throws CapExceeded when a skipped block's bound reaches alpha2.
AldousReport aldous_from_spectrum(const GraphSpectrum& graph, int k, int r,
                                  const SpectrumOptions& options = {});

/// Requires 1 <= r < k < n <= 7 (n = 8 is allowed but slow).
AldousReport aldous_check(int n, int k, int r,
                          const SpectrumOptions& options = {},
                          GraphSpectrum* graph_out = nullptr);

}  // namespace cayley
