#pragma once

#include <vector>

#include "ksgraph/matrix.hpp"

namespace ksg {

struct FloatEigenPair {
  double value = 0.0;
  std::vector<double> vector;
  /// ||m v - lambda v|| / (||m||_F ||v||)
  double residual = 0.0;
};

/// Floating-point eigenpairs sorted by ascending eigenvalue. The symmetric
/// path uses a self-adjoint solver; the general path keeps only real pairs.
/// Throws NoConvergence if the solver fails.
std::vector<FloatEigenPair> float_eig(const RatMat& m, bool symmetric);

/// Residual of (m, v, lambda) under the same normalization as float_eig.
double eigen_residual(const RatMat& m, const std::vector<double>& v, double lambda);

}  // namespace ksg
