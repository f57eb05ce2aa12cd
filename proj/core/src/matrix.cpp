#include "qpea/matrix.hpp"

#include <cmath>

namespace qpea {

SymmetricMatrix::SymmetricMatrix(Eigen::Index order) {
  if (order < 1) throw ValidationError("matrix order must be >= 1");
  data_ = Eigen::MatrixXd::Zero(order, order);
}

SymmetricMatrix SymmetricMatrix::from_dense(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) throw ValidationError("matrix must be square");
  if (a.rows() < 1) throw ValidationError("matrix order must be >= 1");
  if (!a.allFinite()) throw ValidationError("matrix entries must be finite");
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol) {
    throw ValidationError("matrix is not symmetric (max asymmetry " +
                          std::to_string(asym) + ")");
  }
  SymmetricMatrix m(a.rows());
  // Upper triangle is authoritative.
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i <= j; ++i) m.set(i, j, a(i, j));
  return m;
}

bool SymmetricMatrix::is_power_of_two_order() const {
  const auto n = static_cast<std::uint64_t>(order());
  return (n & (n - 1)) == 0;
}

int SymmetricMatrix::qubit_count() const {
  if (!is_power_of_two_order())
    throw ValidationError("matrix order is not a power of two");
  int n = 0;
  while ((Eigen::Index{1} << n) < order()) ++n;
  return n;
}

void SymmetricMatrix::set(Eigen::Index i, Eigen::Index j, double value) {
  if (i < 0 || j < 0 || i >= order() || j >= order())
    throw ValidationError("matrix index out of range");
  if (!std::isfinite(value)) throw ValidationError("matrix entry must be finite");
  data_(i, j) = value;
  data_(j, i) = value;
}

}  // namespace qpea
