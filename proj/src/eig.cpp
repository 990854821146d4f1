#include "ksgraph/eig.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "ksgraph/error.hpp"

// Eigen expression arithmetic stays outside namespace ksg: unqualified
// operator lookup inside ksg would otherwise consider the RatMat operators
// and drag boost::multiprecision conversion traits into Eigen types.
namespace {

Eigen::MatrixXd to_eigen(const ksg::RatMat& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ksg::to_double(m(i, j));
  return out;
}

double residual_impl(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, double lambda) {
  const double scale = m.norm() * v.norm();
  if (scale == 0.0) return 0.0;
  return (m * v - lambda * v).norm() / scale;
}

}  // namespace

namespace ksg {

std::vector<FloatEigenPair> float_eig(const RatMat& m, bool symmetric) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "eigensolver needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  const Eigen::MatrixXd a = to_eigen(m);
  std::vector<FloatEigenPair> out;
  if (symmetric) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
      throw Error(ErrorCode::NoConvergence, "self-adjoint eigensolver failed");
    for (std::size_t i = 0; i < n; ++i) {
      FloatEigenPair pair;
      pair.value = solver.eigenvalues()(i);
      const Eigen::VectorXd v = solver.eigenvectors().col(i);
      pair.vector.assign(v.data(), v.data() + n);
      pair.residual = residual_impl(a, v, pair.value);
      out.push_back(std::move(pair));
    }
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
      throw Error(ErrorCode::NoConvergence, "eigensolver failed");
    const double imag_tol = 1e-9 * (1.0 + a.norm());
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(solver.eigenvalues()(i).imag()) > imag_tol) continue;
      FloatEigenPair pair;
      pair.value = solver.eigenvalues()(i).real();
      const Eigen::VectorXd v = solver.eigenvectors().col(i).real();
      if (v.norm() == 0.0) continue;
      pair.vector.assign(v.data(), v.data() + n);
      pair.residual = residual_impl(a, v, pair.value);
      out.push_back(std::move(pair));
    }
    std::sort(out.begin(), out.end(),
              [](const FloatEigenPair& x, const FloatEigenPair& y) { return x.value < y.value; });
  }
  return out;
}

double eigen_residual(const RatMat& m, const std::vector<double>& v, double lambda) {
  const Eigen::MatrixXd a = to_eigen(m);
  Eigen::VectorXd x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x(i) = v[i];
  return residual_impl(a, x, lambda);
}

}  // namespace ksg
