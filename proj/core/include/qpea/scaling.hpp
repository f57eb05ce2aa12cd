#pragma once

#include "qpea/matrix.hpp"

namespace qpea {

// Column-wise stochastic scaling M -> M D, where D holds the inverse
// column sums. The epsilon fields are relative Frobenius distances between
// the matrix and its right/left scaled versions; both are diagnostics.
struct ScalingResult {
  Eigen::VectorXd column_sums;       // diagonal of D^-1
  Eigen::VectorXd scaling_diagonal;  // diagonal of D
  double epsilon_forward = 0.0;      // ||M - M D||_F / ||M||_F
  double epsilon_inverse = 0.0;      // ||M - D^-1 M||_F / ||M||_F, D^-1 = diag(column sums)
  double shift_used = 0.0;
};

Eigen::VectorXd column_sums(const SymmetricMatrix& m);

// Pre: m has already been shifted entrywise non-negative; throws
// ZeroColumnSum when any column sum is <= 1e-12.
ScalingResult stochastic_scaling(const SymmetricMatrix& m, double shift_used = 0.0);

}  // namespace qpea
