#pragma once

#include <Eigen/Dense>

namespace qpea {

// Split of a square matrix into its nearest Hermitian and skew-Hermitian
// parts, A = H + S with H = (A + A*)/2 and S = (A - A*)/2.
struct HermitianSplit {
  Eigen::MatrixXcd hermitian;
  Eigen::MatrixXcd skew;
  double normality_defect = 0.0;  // ||A*A - AA*||_F
};

HermitianSplit hermitian_split(const Eigen::MatrixXcd& a);

}  // namespace qpea
