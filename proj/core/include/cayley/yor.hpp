#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "cayley/partitions.hpp"
#include "cayley/permgroup.hpp"

namespace cayley {

inline constexpr std::size_t kDefaultDimCap = 512;

/// Largest degree for which evaluators are built.
inline constexpr int kMaxEvaluatorN = 8;

/// Letters i (1-based, s_i = (i i+1)) with sigma = s_{w[0]} s_{w[1]} ...
/// s_{w[L-1]}. Length equals the inversion count of sigma.
std::vector<int> adjacent_word(const Permutation& sigma);

/// Real orthogonal model of the irreducible representation indexed by a
/// shape (Young's orthogonal form). Every rho(sigma) is orthogonal, so the
/// image of an inverse-closed set sum is a symmetric matrix.
///
/// Basis: standard Young tableaux in row-reading lexicographic order. For the
/// adjacent transposition s_i and tableau T, with axial distance
/// d = content(i+1) - content(i):
///   rho(s_i) T = (1/d) T + sqrt(1 - 1/d^2) T'
/// where T' swaps i and i+1 (present only when T' is standard).
class IrrepEvaluator {
 public:
  explicit IrrepEvaluator(Partition shape, std::size_t dim_cap = kDefaultDimCap);

  const Partition& shape() const { return shape_; }
  int degree() const { return shape_.n(); }
  int dim() const { return dim_; }
  const std::vector<Tableau>& tableaux() const { return tableaux_; }

  /// Dense matrix of s_i, 1 <= i <= n-1.
  Eigen::MatrixXd generator(int i) const;

  Eigen::MatrixXd evaluate(const Permutation& sigma) const;

  /// Sum of evaluate(h) over H. Work is split into fixed-size chunks summed
  /// in chunk order, so the result is bit-identical for any worker count.
  Eigen::MatrixXd sum_over_set(const ConnectionSet& h, int workers = 1) const;

 private:
  using RowMatrix =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  // Sparse action of one generator: row t of s_i * M is
  // diagonal[t] * M.row(t) + coupling[t] * M.row(partner[t]).
  struct GeneratorAction {
    std::vector<double> diagonal;
    std::vector<int> partner;
    std::vector<double> coupling;
  };

  void apply_left(int letter, RowMatrix& m) const;
  void accumulate(const Permutation& sigma, RowMatrix& scratch,
                  RowMatrix& total) const;

  Partition shape_;
  int dim_ = 0;
  std::vector<Tableau> tableaux_;
  std::vector<GeneratorAction> actions_;  // index i-1 for s_i
};

IrrepEvaluator build_evaluator(const Partition& shape,
                               std::size_t dim_cap = kDefaultDimCap);

}  // namespace cayley
