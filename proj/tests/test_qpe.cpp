#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpea/generators.hpp"
#include "qpea/probability.hpp"
#include "qpea/qpe.hpp"
#include "test_util.hpp"

using namespace qpea;
using qpea::test::make_matrix;
using qpea::test::example4;

namespace {

constexpr double kPi = std::numbers::pi;

PhaseMap explicit_phases(std::initializer_list<double> phases) {
  PhaseMap map;
  map.scale = 1.0;
  map.offset = 0.0;
  map.phases = Eigen::VectorXd(static_cast<Eigen::Index>(phases.size()));
  Eigen::Index i = 0;
  for (double p : phases) map.phases(i++) = p;
  return map;
}

double tv_distance(const JointDistribution& a, const JointDistribution& b) {
  return 0.5 * (a.probs - b.probs).cwiseAbs().sum();
}

}  // namespace

TEST_CASE("kernel_amplitude closed form") {
  // Exactly representable phase: point mass on its own bin.
  const int m = 4;
  for (std::uint64_t k = 0; k < 16; ++k) {
    const double phi = 2.0 * kPi * static_cast<double>(k) / 16.0;
    CHECK(std::abs(kernel_amplitude(phi, k, m) - std::complex<double>(1.0, 0.0)) < 1e-12);
    for (std::uint64_t other = 0; other < 16; ++other)
      if (other != k) CHECK(std::abs(kernel_amplitude(phi, other, m)) < 1e-12);
  }

  // m = 1, phi = pi/2 splits evenly between the two bins.
  CHECK(std::norm(kernel_amplitude(kPi / 2.0, 0, 1)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::norm(kernel_amplitude(kPi / 2.0, 1, 1)) == doctest::Approx(0.5).epsilon(1e-12));

  // Unitarity: |A_k|^2 sums to 1 for arbitrary phases.
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    double total = 0.0;
    for (std::uint64_t k = 0; k < 64; ++k) total += std::norm(kernel_amplitude(phi, k, 6));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("exact phases reproduce the analytic identities") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(900 + seed);
    const int m = 3 + static_cast<int>(seed % 4);
    const Eigen::Index n = 8;
    const Eigen::Index bins = Eigen::Index{1} << m;

    // Distinct bin assignments for all eigenphases.
    std::vector<Eigen::Index> slots(static_cast<std::size_t>(bins));
    for (Eigen::Index i = 0; i < bins; ++i) slots[static_cast<std::size_t>(i)] = i;
    for (Eigen::Index i = bins - 1; i > 0; --i)
      std::swap(slots[static_cast<std::size_t>(i)],
                slots[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);

    PhaseMap map;
    map.phases = Eigen::VectorXd(n);
    for (Eigen::Index j = 0; j < n; ++j)
      map.phases(j) = 2.0 * kPi * static_cast<double>(slots[static_cast<std::size_t>(j)]) /
                      static_cast<double>(bins);

    const Spectrum s = qpea::test::synthetic_spectrum(
        Eigen::VectorXd::LinSpaced(n, 0.0, 1.0), qpea::test::random_orthogonal(n, seed));
    const AlphaVector a = eigenvector_sums(s);

    QpeConfig cfg;
    cfg.phase_bits = m;
    cfg.phase_override = map;
    cfg.output_hadamards = false;
    const JointDistribution plain = run_spectral(s, a, cfg);
    CHECK(std::abs(plain.total() - 1.0) < 1e-10);
    // Phase marginal equals {alpha_j^2} placed at the assigned bins.
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index k = slots[static_cast<std::size_t>(j)];
      CHECK(plain.probs.row(k).sum() ==
            doctest::Approx(a.alphas(j) * a.alphas(j)).epsilon(1e-10));
    }

    cfg.output_hadamards = true;
    const JointDistribution had = run_spectral(s, a, cfg);
    const MeasurementSummary summary = condition_on_zero(had);
    const SuccessProbabilities p = success_probabilities(a);
    CHECK(summary.p_zero == doctest::Approx(p.p_reg2).epsilon(1e-12));
    const Eigen::Index principal_bin = slots[static_cast<std::size_t>(a.principal_index)];
    CHECK(summary.conditional_phase_dist(principal_bin) ==
          doctest::Approx(p.p_reg1).epsilon(1e-12));
  }
}

TEST_CASE("dense and spectral engines agree") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Eigen::Index n = seed % 2 == 0 ? 8 : 16;
    const SymmetricMatrix m = gen_random_symmetric(n, 0.6, 200 + seed);
    QpeConfig cfg;
    cfg.phase_bits = 4 + static_cast<int>(seed % 3);
    for (bool hadamards : {false, true}) {
      cfg.output_hadamards = hadamards;
      const JointDistribution dense = run_dense(m, cfg);
      const Spectrum s = eigendecompose(m);
      const JointDistribution spectral = run_spectral(s, eigenvector_sums(s), cfg);
      CHECK(std::abs(dense.total() - 1.0) < 1e-10);
      CHECK(std::abs(spectral.total() - 1.0) < 1e-10);
      CHECK(tv_distance(dense, spectral) < 1e-9);
    }
  }
}

TEST_CASE("swap matrix with explicit phases (0, pi)") {
  const SymmetricMatrix m = make_matrix({{0, 1}, {1, 0}});
  QpeConfig cfg;
  cfg.phase_bits = 2;
  cfg.output_hadamards = false;
  cfg.phase_override = explicit_phases({0.0, kPi});

  const Spectrum s = eigendecompose(m);
  const JointDistribution d = run_spectral(s, eigenvector_sums(s), cfg);
  // alpha = (0, 1): all mass on the principal branch, phase pi is bin 2 of 4.
  CHECK(d.probs.row(2).sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.probs.row(0).sum() < 1e-12);

  const JointDistribution dense = run_dense(m, cfg);
  CHECK(tv_distance(dense, d) < 1e-9);
}

TEST_CASE("all-zero phases read bin zero") {
  const SymmetricMatrix m = make_matrix({{2, 1}, {1, 2}});
  QpeConfig cfg;
  cfg.phase_bits = 1;
  cfg.output_hadamards = false;
  cfg.phase_override = explicit_phases({0.0, 0.0});
  const Spectrum s = eigendecompose(m);
  const JointDistribution d = run_spectral(s, eigenvector_sums(s), cfg);
  CHECK(d.probs.row(0).sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("4x4 example: p_zero converges to the analytic value") {
  const SymmetricMatrix m = example4();
  const Spectrum s = eigendecompose(m);
  const AlphaVector a = eigenvector_sums(s);
  const double analytic = success_probabilities(a).p_reg2;

  double prev = 1.0;
  for (int m_bits : {6, 8, 10, 12}) {
    QpeConfig cfg;
    cfg.phase_bits = m_bits;
    const MeasurementSummary summary = condition_on_zero(run_spectral(s, a, cfg));
    const double err = std::abs(summary.p_zero - analytic);
    CHECK(err <= prev + 1e-12);
    prev = err;
    if (m_bits == 12) CHECK(err < 2e-3);
  }
}

TEST_CASE("sign-flipped eigenvectors give identical distributions") {
  const SymmetricMatrix m = gen_random_symmetric(8, 0.7, 31);
  const Spectrum s = eigendecompose(m);
  QpeConfig cfg;
  cfg.phase_bits = 5;
  const JointDistribution base = run_spectral(s, eigenvector_sums(s), cfg);

  Spectrum flipped = s;
  flipped.eigenvectors.col(3) *= -1.0;
  const JointDistribution alt = run_spectral(flipped, eigenvector_sums(flipped), cfg);
  CHECK((base.probs - alt.probs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("condition_on_zero degenerate and point-mass cases") {
  // Single contributing eigenvector: conditioning is a point mass.
  PhaseMap map = explicit_phases({0.0, kPi});
  Spectrum s = qpea::test::synthetic_spectrum(
      (Eigen::VectorXd(2) << 0.0, 1.0).finished(),
      (Eigen::MatrixXd(2, 2) << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0),
       -1 / std::sqrt(2.0), 1 / std::sqrt(2.0))
          .finished());
  QpeConfig cfg;
  cfg.phase_bits = 2;
  cfg.phase_override = map;
  const MeasurementSummary summary =
      condition_on_zero(run_spectral(s, eigenvector_sums(s), cfg));
  CHECK(summary.p_zero == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(summary.top_bin == 2);
  CHECK(summary.conditional_phase_dist(2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("config validation") {
  const SymmetricMatrix m = make_matrix({{0, 1}, {1, 0}});
  const Spectrum s = eigendecompose(m);
  const AlphaVector a = eigenvector_sums(s);
  QpeConfig cfg;
  cfg.phase_bits = 0;
  CHECK_THROWS_AS(run_spectral(s, a, cfg), ValidationError);
  cfg.phase_bits = 25;
  CHECK_THROWS_AS(run_spectral(s, a, cfg), ValidationError);
  cfg.phase_bits = 13;
  CHECK_THROWS_AS(run_dense(m, cfg), ValidationError);

  cfg.phase_bits = 4;
  const SymmetricMatrix big = gen_random_symmetric(512, 0.5, 1);
  CHECK_THROWS_AS(run_dense(big, cfg), ValidationError);
}

TEST_CASE("sampling is deterministic and statistically sane") {
  const SymmetricMatrix m = example4();
  const Spectrum s = eigendecompose(m);
  QpeConfig cfg;
  cfg.phase_bits = 3;
  const JointDistribution d = run_spectral(s, eigenvector_sums(s), cfg);

  CHECK_THROWS_AS(sample(d, 0, 1), ValidationError);

  const auto one = sample(d, 1, 5);
  std::uint64_t total = 0;
  for (auto c : one) total += c;
  CHECK(total == 1);

  const auto a = sample(d, 100000, 99);
  const auto b = sample(d, 100000, 99);
  CHECK(a == b);

  // 4-sigma multinomial bands per cell.
  const double shots = 100000.0;
  for (Eigen::Index k = 0; k < d.bins(); ++k)
    for (Eigen::Index col = 0; col < d.basis_states(); ++col) {
      const double p = d.probs(k, col);
      const double observed =
          static_cast<double>(a[static_cast<std::size_t>(k * d.basis_states() + col)]);
      const double sigma = std::sqrt(shots * p * (1.0 - p));
      CHECK(std::abs(observed - shots * p) <= 4.0 * sigma + 4.0);
    }
}
