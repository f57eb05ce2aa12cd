#include "qpea/scaling.hpp"

namespace qpea {

Eigen::VectorXd column_sums(const SymmetricMatrix& m) {
  return m.dense().colwise().sum().transpose();
}

ScalingResult stochastic_scaling(const SymmetricMatrix& m, double shift_used) {
  ScalingResult result;
  result.shift_used = shift_used;
  result.column_sums = column_sums(m);
  if ((result.column_sums.array() <= 1e-12).any())
    throw ZeroColumnSum("column sum below 1e-12; matrix is degenerate");
  result.scaling_diagonal = result.column_sums.cwiseInverse();

  const Eigen::MatrixXd& a = m.dense();
  const double norm = a.norm();
  if (norm > 0.0) {
    const Eigen::MatrixXd scaled = a * result.scaling_diagonal.asDiagonal();
    result.epsilon_forward = (a - scaled).norm() / norm;
    const Eigen::MatrixXd left = result.column_sums.asDiagonal() * a;
    result.epsilon_inverse = (a - left).norm() / norm;
  }
  return result;
}

}  // namespace qpea
