#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/exact.hpp"
#include "cayley/partitions.hpp"

namespace cayley {

/// chi_shape on the class with the given cycle type (Murnaghan-Nakayama,
/// memoized, thread-safe). Characters of S_n are bounded by the dimension,
/// which fits comfortably in 64 bits for n <= 12.
std::int64_t character(const Partition& shape, const Partition& cycle_class);

/// chi / dim, reduced.
Rational normalized_character(const Partition& shape,
                              const Partition& cycle_class);

/// n! / z_mu, the number of permutations of the given cycle type.
Integer class_size(const Partition& cycle_class);

/// Normalized character on an n-cycle, closed form:
/// (-1)^m n (n-m-1)! m! / n! on the hook (n-m, 1^m), zero elsewhere.
Rational norm_char_ncycle(const Partition& shape);

/// Normalized character on an (n-1)-cycle, closed form: 1 on (n),
/// (-1)^(n-2) on (1^n), the near-hook expression on (n-m, 2, 1^(m-2)),
/// zero elsewhere.
Rational norm_char_n1cycle(const Partition& shape);

/// The Schur scalar of the class sum on the irrep:
/// |class| * chi_shape(class) / dim(shape).
Rational class_sum_eigenvalue(const Partition& shape,
                              const Partition& cycle_class);

/// Distinct eigenvalues (decreasing) of rho_shape on a class sum of the point
/// stabilizer S_{n-1}, where sub_class is a cycle type of n-1. Computed by
/// restricting to S_{n-1}: one Schur scalar per shape in branch_down(shape).
std::vector<Rational> restricted_class_sum_spectrum(const Partition& shape,
                                                    const Partition& sub_class);

/// Distinct eigenvalues of rho_shape on the sum of all (n-1)-cycles fixing one
/// point, from the hook / near-hook case analysis. Requires n >= 5 and
/// shape not (n) or (1^n).
std::vector<Rational> n1cycle_slice_spectrum(const Partition& shape);

/// Same quantity through the branching route.
std::vector<Rational> n1cycle_slice_spectrum_branching(const Partition& shape);

/// Predicted nonzero character on an (n-2)-cycle, per shape family.
struct CyclePredictionRow {
  std::string family;
  Partition shape;
  Rational dimension;
  std::int64_t character;
};

/// Every shape of n with a nonzero character on the class (n-2, 1, 1), with
/// the closed-form dimension and value. Requires 5 <= n <= 12.
std::vector<CyclePredictionRow> n2cycle_character_table(int n);

}  // namespace cayley
