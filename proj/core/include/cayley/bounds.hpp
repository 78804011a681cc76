#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/exact.hpp"
#include "cayley/partitions.hpp"
#include "cayley/permgroup.hpp"
#include "cayley/spectra.hpp"

namespace cayley {

/// Largest eigenvalue of C(n,k;r) on the standard representation, closed form.
/// Requires 1 <= r < k < n.
Rational mu2(int n, int k, int r);

/// mu2(n,k,r) == mu2(n-1,k,r) + mu2(n,k,r+1), exactly.
/// Requires 1 <= r <= k-2 and k <= n-2.
bool mu2_recurrence_holds(int n, int k, int r);

struct ClosedFormValue {
  Rational value;
  std::optional<std::uint64_t> multiplicity;  // known only when k = n-1
};

/// Distinct eigenvalues of C(n,k;r) on the (n-1,1) block, decreasing.
/// Three values for r >= 2, two for r = 1; multiplicities when k = n-1.
/// Requires 1 <= r < k < n and n >= 3.
std::vector<ClosedFormValue> standard_spectrum_closed_form(int n, int k, int r);

enum class BoundKind { weyl_upper, weyl_lower, hhc_level2, hhc_level3 };
std::string_view to_string(BoundKind kind);

/// whole = parts[0] + parts[1] + ... (disjoint), or
/// whole = parts[0] minus (parts[1] + parts[2] + ...).
struct Decomposition {
  enum class Form { disjoint_union, difference };
  Form form = Form::disjoint_union;
  ConnectionSet whole;
  std::vector<ConnectionSet> parts;
  std::string description;
};

/// H split by the point each element fixes; every element must fix exactly
/// one point (as (n-1)-cycles do). Empty slices are dropped.
Decomposition slice_union(const ConnectionSet& h);

/// C(n,n-1;r) = C(n,n-1) minus the slices fixing 1..r.
Decomposition class_minus_slices(int n, int r);

/// H = (H fixing j) + (H moving j).
Decomposition chain_step(const ConnectionSet& h, int j);

struct BoundCertificate {
  std::string target;
  BoundKind kind = BoundKind::weyl_upper;
  std::string decomposition;
  double bound = 0.0;
  double computed = 0.0;
  bool holds = false;
};

/// "target=... kind=... decomposition=... bound=... computed=... holds=..."
std::string to_log_line(const BoundCertificate& c);

/// Checks lambda_1 (weyl_upper) or lambda_min (weyl_lower) of rho_shape(whole)
/// against the sum of the parts' extremes. Parts that are a full slice of
/// (n-1)-cycles use the closed-form slice spectrum; everything else is
/// computed. Throws ParameterError on a malformed decomposition.
BoundCertificate weyl_certify(const Partition& shape, const Decomposition& d,
                              BoundKind kind, const SpectrumOptions& options = {});

/// Assembled spectrum of Cay(S_n, C(n,k;r)), memoized on (n, k, r).
const GraphSpectrum& cached_graph_spectrum(int n, int k, int r,
                                           const SpectrumOptions& options = {});

/// lambda_level(Cay(S_{n-1}, C(n-1,k;r))) + lambda_level(Cay(S_n, C(n,k;r+1))).
/// Level 2 for even k, level 3 for odd k. Requires 1 <= r <= k-2, k <= n-2.
double recursive_upper_bound(int n, int k, int r, int level,
                             const SpectrumOptions& options = {});

/// Largest eigenvalue of the graph once the spectrum of the quotient matrix
/// has been removed (multiplicity in excess of B's counts as non-B). When
/// every generator is even, B's spectrum is removed twice: once for the coset
/// partition and once for its sign-twisted copy.
std::optional<double> largest_non_quotient_eigenvalue(
    const GraphSpectrum& graph, const ConnectionSet& h,
    const SpectrumOptions& options = {});

/// Certificate: every non-B eigenvalue of Cay(S_n, C(n,k;r)) is at most the
/// recursive bound at the level matching k's parity.
BoundCertificate certify_recursive_bound(int n, int k, int r,
                                         const SpectrumOptions& options = {});

/// What the odd/even k = n-1 theorems predict for alpha2 of
/// Cay(S_n, C(n,n-1;r)).
struct Table1Prediction {
  int n = 0, r = 0;
  bool small_case = false;  // (5,1) and (6,1): no general formula
  std::string cell;         // row of the summary table
  Rational value;
  std::vector<Partition> required;  // attain alpha2
  std::vector<Partition> optional;  // may or may not attain it
  std::optional<std::uint64_t> multiplicity;
};

/// Requires n >= 5 and 1 <= r <= n-2.
Table1Prediction table1_prediction(int n, int r);

}  // namespace cayley
