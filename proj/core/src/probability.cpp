#include "qpea/probability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpea/structure.hpp"

namespace qpea {
namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double population_variance(const Eigen::VectorXd& v) {
  const double mean = v.mean();
  return (v.array() - mean).square().mean();
}

}  // namespace

AlphaVector eigenvector_sums(const Spectrum& s) {
  AlphaVector a;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(s.order()));
  a.alphas = inv_sqrt_n * s.eigenvectors.colwise().sum().transpose();
  a.principal_index = s.order() - 1;

  const double parseval = a.alphas.squaredNorm();
  if (std::abs(parseval - 1.0) > 1e-10)
    throw ValidationError("alpha vector violates Parseval: sum of squares " +
                          std::to_string(parseval));
  return a;
}

SuccessProbabilities success_probabilities(const AlphaVector& a) {
  SuccessProbabilities p;
  const double n = static_cast<double>(a.order());
  p.alpha1_sq = a.alphas(a.principal_index) * a.alphas(a.principal_index);
  p.p_reg2 = a.alphas.array().square().square().sum();
  p.p_reg1 = p.alpha1_sq * p.alpha1_sq / p.p_reg2;
  if (p.p_reg2 < 1.0 / n - 1e-9 || p.p_reg2 > 1.0 + 1e-9)
    throw ValidationError("p_reg2 outside [1/N, 1]: " + std::to_string(p.p_reg2));
  return p;
}

EstimatedProbabilities estimate_probabilities(const SymmetricMatrix& m) {
  const auto [shifted, shift] = nonneg_shift(m);
  const ScalingResult scaling = stochastic_scaling(shifted, shift);
  const double n = static_cast<double>(m.order());

  const Eigen::VectorXd s = scaling.column_sums / scaling.column_sums.norm();
  const Eigen::VectorXd r = scaling.scaling_diagonal / scaling.scaling_diagonal.norm();

  EstimatedProbabilities est;
  est.shift_used = shift;
  est.epsilon_forward = scaling.epsilon_forward;
  est.epsilon_inverse = scaling.epsilon_inverse;
  est.sigma1 = population_variance(s);
  est.sigma2 = population_variance(r);
  est.lambda1 = (1.0 / n - est.sigma1) / (1.0 / n + est.sigma1);
  est.lambda2 = (1.0 / n - est.sigma2) / (1.0 / n + est.sigma2);
  est.p_reg2_est = clamp01(0.5 * (est.lambda1 + est.lambda2));
  est.alpha1_sq_est = clamp01(0.5 * ((1.0 - n * est.sigma1) + (1.0 - n * est.sigma2)));
  est.p_reg1_est = est.p_reg2_est > 0.0
                       ? clamp01(est.alpha1_sq_est * est.alpha1_sq_est / est.p_reg2_est)
                       : 0.0;
  return est;
}

RatioBound ratio_bound(const SymmetricMatrix& m) {
  const Spectrum s = eigendecompose(m);
  const auto principal = principal_eigenpair(s, check_structure(m));
  return ratio_bound(m, principal.vector);
}

RatioBound ratio_bound(const SymmetricMatrix& m, const Eigen::VectorXd& principal) {
  RatioBound rb;
  const auto [shifted, shift] = nonneg_shift(m);
  const double min_entry = shifted.dense().minCoeff();
  rb.applicable = min_entry > 0.0;
  if (!rb.applicable) return rb;

  rb.bound = shifted.dense().maxCoeff() / min_entry;
  rb.actual = principal.maxCoeff() / principal.minCoeff();
  if (rb.actual > rb.bound * (1.0 + 1e-9))
    throw ValidationError("element-ratio bound violated: actual " +
                          std::to_string(rb.actual) + " > bound " +
                          std::to_string(rb.bound));
  return rb;
}

ProbabilityReport full_report(const SymmetricMatrix& m) {
  const StructureReport structure = check_structure(m);
  if (!structure.offdiag_nonnegative)
    throw ValidationError("full_report requires non-negative off-diagonals");
  if (!structure.irreducible)
    throw ValidationError(
        "full_report requires an irreducible matrix (Perron-Frobenius precondition)");

  const Spectrum spectrum = eigendecompose(m);
  const AlphaVector alphas = eigenvector_sums(spectrum);
  const SuccessProbabilities computed = success_probabilities(alphas);
  const EstimatedProbabilities est = estimate_probabilities(m);
  const auto principal = principal_eigenpair(spectrum, structure);
  const RatioBound rb = ratio_bound(m, principal.vector);

  ProbabilityReport report;
  report.order = m.order();
  report.alpha1_sq = computed.alpha1_sq;
  report.p_reg2 = computed.p_reg2;
  report.p_reg1 = computed.p_reg1;
  report.alpha1_sq_est = est.alpha1_sq_est;
  report.p_reg2_est = est.p_reg2_est;
  report.p_reg1_est = est.p_reg1_est;
  report.sigma1 = est.sigma1;
  report.sigma2 = est.sigma2;
  report.lambda1 = est.lambda1;
  report.lambda2 = est.lambda2;
  report.epsilon_forward = est.epsilon_forward;
  report.epsilon_inverse = est.epsilon_inverse;
  report.ratio_bound_value = rb.bound;
  report.ratio_actual = rb.actual;
  report.ratio_applicable = rb.applicable;
  return report;
}

}  // namespace qpea
