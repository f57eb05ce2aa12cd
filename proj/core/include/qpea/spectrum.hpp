#pragma once

#include "qpea/matrix.hpp"
#include "qpea/structure.hpp"

namespace qpea {

// Full eigendecomposition of a symmetric matrix. Eigenvalues ascending;
// eigenvector columns orthonormal and sign-fixed so that each column's
// coefficient sum is positive (first nonzero entry positive when the sum
// vanishes). The "principal" (Perron) eigenpair is the last column.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  double residual_norm = 0.0;  // max_j ||H v_j - lambda_j v_j||_2

  Eigen::Index order() const { return eigenvalues.size(); }
};

Spectrum eigendecompose(const SymmetricMatrix& m);

struct PrincipalEigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;  // sign-fixed, entries positive up to rounding noise
  int negative_noise_entries = 0;
  double most_negative_entry = 0.0;
};

// Pre: the structure report shows non-negative off-diagonals and
// irreducibility, so Perron-Frobenius applies to the shifted matrix.
// Throws PerronViolation when the sign-fixed vector dips below -1e-6.
PrincipalEigenpair principal_eigenpair(const Spectrum& s, const StructureReport& structure);

}  // namespace qpea
