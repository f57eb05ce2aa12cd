#include "qpea/spectrum.hpp"

#include <lapacke.h>

#include <cmath>
#include <string>

namespace qpea {
namespace {

// Sign convention: column sum positive; first nonzero entry positive when
// the sum is within 1e-12 of zero.
void fix_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    const double sum = vectors.col(j).sum();
    bool flip = false;
    if (std::abs(sum) > 1e-12) {
      flip = sum < 0.0;
    } else {
      for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
        if (vectors(i, j) != 0.0) {
          flip = vectors(i, j) < 0.0;
          break;
        }
      }
    }
    if (flip) vectors.col(j) = -vectors.col(j);
  }
}

}  // namespace

Spectrum eigendecompose(const SymmetricMatrix& m) {
  const Eigen::Index n = m.order();
  Spectrum s;
  s.eigenvectors = m.dense();
  s.eigenvalues.resize(n);

  const lapack_int info = LAPACKE_dsyevd(
      LAPACK_COL_MAJOR, 'V', 'U', static_cast<lapack_int>(n),
      s.eigenvectors.data(), static_cast<lapack_int>(n), s.eigenvalues.data());
  if (info != 0)
    throw ConvergenceFailure("dsyevd failed with info " + std::to_string(info));

  fix_signs(s.eigenvectors);

  const Eigen::MatrixXd residual =
      m.dense() * s.eigenvectors - s.eigenvectors * s.eigenvalues.asDiagonal();
  s.residual_norm = residual.colwise().norm().maxCoeff();

  const double scale = 1.0 + s.eigenvalues.cwiseAbs().maxCoeff();
  if (s.residual_norm > 1e-8 * scale)
    throw ConvergenceFailure("eigendecomposition residual " +
                             std::to_string(s.residual_norm) + " exceeds tolerance");
  return s;
}

PrincipalEigenpair principal_eigenpair(const Spectrum& s, const StructureReport& structure) {
  if (!structure.offdiag_nonnegative)
    throw ValidationError("principal_eigenpair requires non-negative off-diagonals");
  if (!structure.irreducible)
    throw ValidationError("principal_eigenpair requires an irreducible matrix");

  PrincipalEigenpair p;
  const Eigen::Index last = s.order() - 1;
  p.value = s.eigenvalues(last);
  p.vector = s.eigenvectors.col(last);
  p.most_negative_entry = p.vector.minCoeff();
  for (Eigen::Index i = 0; i < p.vector.size(); ++i)
    if (p.vector(i) < -1e-10) ++p.negative_noise_entries;
  if (p.most_negative_entry < -1e-6)
    throw PerronViolation("principal eigenvector entry " +
                          std::to_string(p.most_negative_entry) +
                          "; input may be reducible");
  return p;
}

}  // namespace qpea
