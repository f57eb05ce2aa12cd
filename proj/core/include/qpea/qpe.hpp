#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qpea/matrix.hpp"
#include "qpea/phase_map.hpp"
#include "qpea/probability.hpp"
#include "qpea/spectrum.hpp"

namespace qpea {

enum class Engine { Dense, Spectral };

struct QpeConfig {
  int phase_bits = 8;  // m, precision of the phase register
  bool output_hadamards = true;
  double guard = -1.0;  // < 0 selects the default 2^-m
  Engine engine = Engine::Spectral;
  // Explicit phases bypass phase_encode; used for exact-phase tests.
  std::optional<PhaseMap> phase_override;
};

// Exact finite-m outcome probabilities over (phase bin k, second-register
// basis state b). Entries are squared amplitude magnitudes, not samples;
// magnitudes below 1e-15 are clamped to zero.
struct JointDistribution {
  Eigen::MatrixXd probs;  // 2^m rows (k) by 2^n columns (b)
  bool hadamard_basis = false;
  PhaseMap phase_map;
  int phase_bits = 0;

  Eigen::Index bins() const { return probs.rows(); }
  Eigen::Index basis_states() const { return probs.cols(); }
  double total() const { return probs.sum(); }
};

struct MeasurementSummary {
  double p_zero = 0.0;  // probability the second register reads all zeros
  Eigen::VectorXd conditional_phase_dist;
  Eigen::VectorXd phase_marginal;
  Eigen::Index top_bin = 0;
  double eigenvalue_estimate = 0.0;  // top bin mapped back through the phase map
};

// Finite-resolution QPE amplitude of bin k for true phase phi:
// A_k(phi) = (1/2^m) sum_x e^{i x (phi - 2 pi k / 2^m)}, closed form.
std::complex<double> kernel_amplitude(double phase, std::uint64_t bin, int phase_bits);

// Closed-form engine: sums kernel amplitudes over the spectrum. Valid for
// any power-of-two order; phase_bits in [1, 24].
JointDistribution run_spectral(const Spectrum& s, const AlphaVector& a, const QpeConfig& cfg);

// Literal statevector simulation over phase_bits + n qubits. Caps:
// n <= 8, phase_bits <= 12, joint state at most 2^20 amplitudes.
JointDistribution run_dense(const SymmetricMatrix& m, const QpeConfig& cfg);

// Pre: the distribution was built with output Hadamards enabled.
MeasurementSummary condition_on_zero(const JointDistribution& d);

// Multinomial draw of `shots` outcomes; counts indexed k * 2^n + b.
std::vector<std::uint64_t> sample(const JointDistribution& d, std::uint64_t shots,
                                  std::uint64_t seed);

}  // namespace qpea
