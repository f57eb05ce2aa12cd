#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <vector>

#include "qpea/matrix.hpp"
#include "qpea/rng.hpp"
#include "qpea/spectrum.hpp"

namespace qpea::test {

inline SymmetricMatrix make_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXd a(rows.size(), rows.size());
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) a(i, j++) = v;
    ++i;
  }
  return SymmetricMatrix::from_dense(a);
}

// The worked 4x4 example: near-diagonal, deliberately adversarial for the
// variance estimator.
inline SymmetricMatrix example4() {
  return make_matrix({{21.8214, 0, 0.6118, 0.4983},
                      {0, 14.2944, 0.4983, 0.6118},
                      {0.6118, 0.4983, 12.1626, 0},
                      {0.4983, 0.6118, 0, 5.4111}});
}

// Haar-ish random orthogonal matrix via QR, columns sign-fixed to match the
// eigenvector convention (column sum positive).
inline Eigen::MatrixXd random_orthogonal(Eigen::Index n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = rng.normal();
  Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
  for (Eigen::Index j = 0; j < n; ++j)
    if (q.col(j).sum() < 0.0) q.col(j) = -q.col(j);
  return q;
}

inline Spectrum synthetic_spectrum(const Eigen::VectorXd& eigenvalues,
                                   const Eigen::MatrixXd& vectors) {
  Spectrum s;
  s.eigenvalues = eigenvalues;
  s.eigenvectors = vectors;
  s.residual_norm = 0.0;
  return s;
}

// Symmetric doubly stochastic matrix: symmetrized average of random
// permutation matrices. Caller should verify irreducibility.
inline SymmetricMatrix doubly_stochastic(Eigen::Index n, int permutations,
                                         std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  for (int p = 0; p < permutations; ++p) {
    for (Eigen::Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (Eigen::Index i = n - 1; i > 0; --i) {
      const auto j = static_cast<Eigen::Index>(
          rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      acc(i, perm[static_cast<std::size_t>(i)]) += 0.5;
      acc(perm[static_cast<std::size_t>(i)], i) += 0.5;
    }
  }
  return SymmetricMatrix::from_dense(acc / permutations);
}

}  // namespace qpea::test
