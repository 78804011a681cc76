#pragma once

#include <vector>

#include <Eigen/Core>

namespace cayley {

/// Eigenvalues of a real symmetric matrix, decreasing. Throws
/// ParameterError when the input is not symmetric to within
/// 1e-8 * (1 + max|M|), NumericalError when LAPACK reports a failure.
std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m);

}  // namespace cayley
