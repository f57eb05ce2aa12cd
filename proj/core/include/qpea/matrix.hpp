#pragma once

#include <Eigen/Dense>

#include "qpea/errors.hpp"

namespace qpea {

// Dense real symmetric matrix. All writes go through set(), which mirrors
// the entry across the diagonal, so the stored data is symmetric at all
// times; there is no separate lower-triangle state to drift.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Eigen::Index order);

  // Validates symmetry (exact by default) and finiteness.
  static SymmetricMatrix from_dense(const Eigen::MatrixXd& a, double tol = 0.0);

  Eigen::Index order() const { return data_.rows(); }

  bool is_power_of_two_order() const;

  // log2(order); throws ValidationError when the order is not a power of two.
  int qubit_count() const;

  double operator()(Eigen::Index i, Eigen::Index j) const { return data_(i, j); }

  void set(Eigen::Index i, Eigen::Index j, double value);

  void add(Eigen::Index i, Eigen::Index j, double value) {
    set(i, j, data_(i, j) + value);
  }

  const Eigen::MatrixXd& dense() const { return data_; }

 private:
  Eigen::MatrixXd data_;
};

}  // namespace qpea
