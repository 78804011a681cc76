#include "cayley/eigensolver.hpp"

#include <algorithm>
#include <functional>

#include <lapacke.h>

#include "cayley/errors.hpp"

namespace cayley {

std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ParameterError("sym_eigenvalues: matrix not square");
  if (m.size() == 0) return {};
  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym >= 1e-8 * (1.0 + scale)) {
    throw ParameterError("sym_eigenvalues: matrix is not symmetric (asymmetry " +
                         std::to_string(asym) + ")");
  }
  // Divide and conquer from LAPACK; Eigen's tridiagonal QR runs out of
  // iterations on some of the 720-vertex adjacency matrices.
  Eigen::MatrixXd work = 0.5 * (m + m.transpose());
  const auto dim = static_cast<lapack_int>(work.rows());
  std::vector<double> values(static_cast<std::size_t>(dim));
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'U', dim, work.data(),
                                         dim, values.data());
  if (info != 0) {
    throw NumericalError("sym_eigenvalues: dsyevd failed with info " +
                         std::to_string(info));
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace cayley
