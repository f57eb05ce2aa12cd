#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpea/generators.hpp"
#include "qpea/probability.hpp"
#include "qpea/structure.hpp"
#include "test_util.hpp"

using namespace qpea;
using qpea::test::make_matrix;
using qpea::test::example4;

TEST_CASE("eigenvector_sums reproduces the 4x4 column-sum magnitudes") {
  const Spectrum s = eigendecompose(example4());
  const AlphaVector a = eigenvector_sums(s);
  REQUIRE(a.order() == 4);
  CHECK(a.principal_index == 3);

  // |alpha| * sqrt(N), ascending eigenvalue order.
  const double expected[4] = {0.90578, 0.68529, 1.22675, 1.09773};
  for (Eigen::Index j = 0; j < 4; ++j)
    CHECK(std::abs(a.alphas(j)) * 2.0 == doctest::Approx(expected[j]).epsilon(5e-5));
  CHECK(a.alphas(3) >= 0.0);
}

TEST_CASE("eigenvector_sums simple fixtures") {
  const Spectrum swap = eigendecompose(make_matrix({{0, 1}, {1, 0}}));
  const AlphaVector a = eigenvector_sums(swap);
  CHECK(std::abs(a.alphas(0)) < 1e-12);
  CHECK(a.alphas(1) == doctest::Approx(1.0).epsilon(1e-12));

  // Diagonal matrix: eigenbasis is the standard basis, every |alpha| = 1/sqrt(N).
  const Spectrum diag = eigendecompose(make_matrix(
      {{3, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 2}}));
  const AlphaVector d = eigenvector_sums(diag);
  for (Eigen::Index j = 0; j < 4; ++j)
    CHECK(std::abs(d.alphas(j)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("success_probabilities closed-form cases") {
  AlphaVector point;
  point.alphas = Eigen::VectorXd::Zero(8);
  point.alphas(5) = 1.0;
  point.principal_index = 5;
  const SuccessProbabilities p = success_probabilities(point);
  CHECK(p.alpha1_sq == doctest::Approx(1.0));
  CHECK(p.p_reg2 == doctest::Approx(1.0));
  CHECK(p.p_reg1 == doctest::Approx(1.0));

  AlphaVector uniform;
  uniform.alphas = Eigen::VectorXd::Constant(8, 1.0 / std::sqrt(8.0));
  uniform.principal_index = 7;
  const SuccessProbabilities u = success_probabilities(uniform);
  CHECK(u.p_reg2 == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("success_probabilities on the 4x4 example") {
  const Spectrum s = eigendecompose(example4());
  const SuccessProbabilities p = success_probabilities(eigenvector_sums(s));
  CHECK(p.alpha1_sq == doctest::Approx(0.30125).epsilon(5e-5));
  CHECK(p.p_reg2 == doctest::Approx(0.28816).epsilon(5e-5));
  CHECK(p.p_reg1 == doctest::Approx(0.31495).epsilon(5e-5));

  // Conditional weight of the largest-sum (non-principal) eigenvector.
  const AlphaVector a = eigenvector_sums(s);
  const double w = std::pow(a.alphas(2), 4.0) / p.p_reg2;
  CHECK(w == doctest::Approx(0.49122).epsilon(5e-5));
}

TEST_CASE("estimate_probabilities hand-evaluated 2x2") {
  const SymmetricMatrix m = make_matrix({{0, 1}, {1, 2}});
  const EstimatedProbabilities e = estimate_probabilities(m);
  // Column sums (1, 3); normalized s = (1,3)/sqrt(10).
  CHECK(e.sigma1 == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(e.sigma2 == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(e.lambda1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(e.lambda2 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(e.p_reg2_est == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(e.alpha1_sq_est == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(e.p_reg1_est == doctest::Approx(0.96).epsilon(1e-12));

  // Computed truth for the same matrix; the estimator is approximate.
  const SuccessProbabilities t =
      success_probabilities(eigenvector_sums(eigendecompose(m)));
  CHECK(t.alpha1_sq == doctest::Approx(0.8536).epsilon(5e-4));
  CHECK(t.p_reg2 == doctest::Approx(0.75).epsilon(1e-4));
  CHECK(t.p_reg1 == doctest::Approx(0.9715).epsilon(5e-4));
}

TEST_CASE("estimator is scale invariant and clamped") {
  const SymmetricMatrix m = make_matrix({{0, 1}, {1, 2}});
  const EstimatedProbabilities base = estimate_probabilities(m);
  for (double gamma : {0.1, 7.0}) {
    SymmetricMatrix scaled(m.order());
    for (Eigen::Index i = 0; i < m.order(); ++i)
      for (Eigen::Index j = i; j < m.order(); ++j) scaled.set(i, j, gamma * m(i, j));
    const EstimatedProbabilities e = estimate_probabilities(scaled);
    CHECK(std::abs(e.alpha1_sq_est - base.alpha1_sq_est) < 1e-12);
    CHECK(std::abs(e.p_reg2_est - base.p_reg2_est) < 1e-12);
    CHECK(std::abs(e.p_reg1_est - base.p_reg1_est) < 1e-12);
    CHECK(std::abs(e.sigma1 - base.sigma1) < 1e-12);
  }

  // Wildly uneven column sums drive Lambda negative; clamps keep [0,1].
  const SymmetricMatrix skew = make_matrix(
      {{100, 0.01, 0.01}, {0.01, 0, 0.01}, {0.01, 0.01, 0}});
  const EstimatedProbabilities e = estimate_probabilities(skew);
  CHECK(e.alpha1_sq_est >= 0.0);
  CHECK(e.alpha1_sq_est <= 1.0);
  CHECK(e.p_reg2_est >= 0.0);
  CHECK(e.p_reg2_est <= 1.0);
  CHECK(e.p_reg1_est >= 0.0);
  CHECK(e.p_reg1_est <= 1.0);
}

TEST_CASE("doubly stochastic matrices estimate and compute to one") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SymmetricMatrix m = qpea::test::doubly_stochastic(8, 6, seed);
    if (!check_structure(m).irreducible) continue;
    const EstimatedProbabilities e = estimate_probabilities(m);
    CHECK(e.sigma1 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(e.sigma2 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(e.alpha1_sq_est == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.p_reg2_est == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.p_reg1_est == doctest::Approx(1.0).epsilon(1e-12));

    const SuccessProbabilities p =
        success_probabilities(eigenvector_sums(eigendecompose(m)));
    CHECK(p.alpha1_sq == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(p.p_reg1 == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("ratio_bound fixtures") {
  const RatioBound sym = ratio_bound(make_matrix({{1, 2}, {2, 1}}));
  CHECK(sym.applicable);
  CHECK(sym.bound == doctest::Approx(2.0));
  CHECK(sym.actual == doctest::Approx(1.0));

  const RatioBound golden = ratio_bound(make_matrix({{1, 1}, {1, 2}}));
  CHECK(golden.applicable);
  CHECK(golden.bound == doctest::Approx(2.0));
  CHECK(golden.actual == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-9));
  CHECK(golden.actual <= golden.bound * (1.0 + 1e-9));

  // A zero entry breaks the bound; it must be flagged not applicable.
  const SymmetricMatrix counter = make_matrix({{0, 1}, {1, 2}});
  const RatioBound c = ratio_bound(counter);
  CHECK_FALSE(c.applicable);
  const auto principal =
      principal_eigenpair(eigendecompose(counter), check_structure(counter));
  const double naive = principal.vector.maxCoeff() / principal.vector.minCoeff();
  CHECK(naive == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-9));
  CHECK(naive > 2.0);
}

TEST_CASE("full_report fixtures") {
  const ProbabilityReport r = full_report(example4());
  CHECK(r.order == 4);
  CHECK(r.alpha1_sq == doctest::Approx(0.30125).epsilon(5e-5));
  CHECK(r.p_reg2 == doctest::Approx(0.28816).epsilon(5e-5));
  CHECK(r.p_reg1 == doctest::Approx(0.31495).epsilon(5e-5));
  CHECK(r.p_reg1 == doctest::Approx(r.alpha1_sq * r.alpha1_sq / r.p_reg2).epsilon(1e-12));

  const ProbabilityReport flat = full_report(make_matrix({{0.5, 0.5}, {0.5, 0.5}}));
  CHECK(flat.alpha1_sq == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(flat.p_reg2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(flat.p_reg1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(flat.alpha1_sq_est == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(flat.p_reg1_est == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(full_report(make_matrix({{1, 0}, {0, 2}})), ValidationError);
}

TEST_CASE("full_report invariants on random draws") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SymmetricMatrix m = gen_random_symmetric(64, 0.5, seed);
    const ProbabilityReport r = full_report(m);
    CHECK(r.p_reg2 >= 1.0 / 64.0 - 1e-12);
    CHECK(r.p_reg2 <= 1.0 + 1e-12);
    CHECK(r.p_reg1 >= std::pow(r.alpha1_sq, 2.0) - 1e-12);
    CHECK(r.p_reg1 <= 1.0 + 1e-12);
    for (double v : {r.alpha1_sq, r.p_reg2, r.p_reg1, r.alpha1_sq_est,
                     r.p_reg2_est, r.p_reg1_est}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("computed fields are shift invariant, estimates need not be") {
  const SymmetricMatrix m = example4();
  const ProbabilityReport base = full_report(m);
  SymmetricMatrix shifted(m.order());
  for (Eigen::Index i = 0; i < m.order(); ++i)
    for (Eigen::Index j = i; j < m.order(); ++j)
      shifted.set(i, j, m(i, j) + (i == j ? 5.0 : 0.0));
  const ProbabilityReport r = full_report(shifted);
  CHECK(std::abs(r.alpha1_sq - base.alpha1_sq) < 1e-9);
  CHECK(std::abs(r.p_reg2 - base.p_reg2) < 1e-9);
  CHECK(std::abs(r.p_reg1 - base.p_reg1) < 1e-9);
}

TEST_CASE("Parseval holds and survives eigenvector sign flips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Eigen::Index n = 8;
    Spectrum s = qpea::test::synthetic_spectrum(
        Eigen::VectorXd::LinSpaced(n, 1.0, 2.0),
        qpea::test::random_orthogonal(n, seed));
    const AlphaVector a = eigenvector_sums(s);
    CHECK(std::abs(a.alphas.squaredNorm() - 1.0) < 1e-10);
    const SuccessProbabilities p = success_probabilities(a);

    Spectrum flipped = s;
    flipped.eigenvectors.col(static_cast<Eigen::Index>(seed % n)) *= -1.0;
    const SuccessProbabilities q =
        success_probabilities(eigenvector_sums(flipped));
    CHECK(p.alpha1_sq == doctest::Approx(q.alpha1_sq).epsilon(1e-12));
    CHECK(p.p_reg2 == doctest::Approx(q.p_reg2).epsilon(1e-12));
    CHECK(p.p_reg1 == doctest::Approx(q.p_reg1).epsilon(1e-12));
  }
}
