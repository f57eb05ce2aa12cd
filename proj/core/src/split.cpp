#include "qpea/split.hpp"

#include "qpea/errors.hpp"

namespace qpea {

HermitianSplit hermitian_split(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw ValidationError("hermitian_split needs a square matrix");
  HermitianSplit split;
  const Eigen::MatrixXcd adj = a.adjoint();
  split.hermitian = 0.5 * (a + adj);
  split.skew = 0.5 * (a - adj);
  split.normality_defect = (adj * a - a * adj).norm();
  return split;
}

}  // namespace qpea
