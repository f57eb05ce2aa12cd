#pragma once

#include "qpea/matrix.hpp"
#include "qpea/scaling.hpp"
#include "qpea/spectrum.hpp"

namespace qpea {

// Overlaps of the eigenvectors with the uniform state, in ascending
// eigenvalue order. The eigenvector sign convention makes the principal
// entry non-negative.
struct AlphaVector {
  Eigen::VectorXd alphas;
  Eigen::Index principal_index = 0;

  Eigen::Index order() const { return alphas.size(); }
};

AlphaVector eigenvector_sums(const Spectrum& s);

struct SuccessProbabilities {
  double alpha1_sq = 0.0;  // overlap^2 of the principal eigenvector
  double p_reg2 = 0.0;     // sum of alpha^4; in [1/N, 1]
  double p_reg1 = 0.0;     // alpha1_sq^2 / p_reg2
};

SuccessProbabilities success_probabilities(const AlphaVector& a);

// Variance-based a-priori estimates from the column sums of the shifted
// matrix. Both column-sum vectors are normalized to unit Euclidean norm
// before taking the population variance, so a stochastic-like matrix sits
// at exactly 1/sqrt(N) per entry. Estimates are clamped to [0, 1].
struct EstimatedProbabilities {
  double alpha1_sq_est = 0.0;
  double p_reg2_est = 0.0;
  double p_reg1_est = 0.0;
  double sigma1 = 0.0;  // variance of normalized column sums
  double sigma2 = 0.0;  // variance of normalized inverse column sums
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double epsilon_forward = 0.0;
  double epsilon_inverse = 0.0;
  double shift_used = 0.0;
};

EstimatedProbabilities estimate_probabilities(const SymmetricMatrix& m);

// Element-ratio bound on the spread of the principal eigenvector. Only
// applicable when the shifted matrix is strictly positive entrywise; a
// single zero entry admits counterexamples.
struct RatioBound {
  double bound = 0.0;
  double actual = 0.0;
  bool applicable = false;
};

RatioBound ratio_bound(const SymmetricMatrix& m);
RatioBound ratio_bound(const SymmetricMatrix& m, const Eigen::VectorXd& principal);

struct ProbabilityReport {
  Eigen::Index order = 0;
  double alpha1_sq = 0.0;
  double p_reg2 = 0.0;
  double p_reg1 = 0.0;
  double alpha1_sq_est = 0.0;
  double p_reg2_est = 0.0;
  double p_reg1_est = 0.0;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double epsilon_forward = 0.0;
  double epsilon_inverse = 0.0;
  double ratio_bound_value = 0.0;
  double ratio_actual = 0.0;
  bool ratio_applicable = false;
};

// Computed and estimated probabilities plus diagnostics in one record.
// Pre: check_structure passes (non-negative off-diagonals, irreducible).
ProbabilityReport full_report(const SymmetricMatrix& m);

}  // namespace qpea
