#include "qpea/qpe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qpea/rng.hpp"

namespace qpea {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kProbClamp = 1e-15;

// In-place Walsh-Hadamard transform on each row, scaled by 1/sqrt(N).
void hadamard_rows(Eigen::MatrixXcd& state) {
  const Eigen::Index n = state.cols();
  for (Eigen::Index half = 1; half < n; half *= 2) {
    for (Eigen::Index base = 0; base < n; base += 2 * half) {
      for (Eigen::Index i = base; i < base + half; ++i) {
        const Eigen::VectorXcd a = state.col(i);
        const Eigen::VectorXcd b = state.col(i + half);
        state.col(i) = a + b;
        state.col(i + half) = a - b;
      }
    }
  }
  state *= 1.0 / std::sqrt(static_cast<double>(n));
}

void hadamard_rows(Eigen::MatrixXd& state) {
  const Eigen::Index n = state.cols();
  for (Eigen::Index half = 1; half < n; half *= 2) {
    for (Eigen::Index base = 0; base < n; base += 2 * half) {
      for (Eigen::Index i = base; i < base + half; ++i) {
        const Eigen::VectorXd a = state.col(i);
        const Eigen::VectorXd b = state.col(i + half);
        state.col(i) = a + b;
        state.col(i + half) = a - b;
      }
    }
  }
  state *= 1.0 / std::sqrt(static_cast<double>(n));
}

// Iterative radix-2 DFT, y[k] = sum_x e^{-2 pi i k x / M} v[x], in place.
void dft_forward(std::vector<std::complex<double>>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -kTwoPi / static_cast<double>(len);
    const std::complex<double> wlen = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w{1.0, 0.0};
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = v[i + k];
        const std::complex<double> t = v[i + k + len / 2] * w;
        v[i + k] = u + t;
        v[i + k + len / 2] = u - t;
        w *= wlen;
      }
    }
  }
}

Eigen::MatrixXd clamp_probs(const Eigen::MatrixXcd& amplitudes) {
  Eigen::MatrixXd probs = amplitudes.cwiseAbs2();
  return (probs.array() < kProbClamp).select(0.0, probs);
}

PhaseMap resolve_phase_map(const Spectrum& s, const QpeConfig& cfg) {
  if (cfg.phase_override) return *cfg.phase_override;
  const double guard = cfg.guard >= 0.0 ? cfg.guard : default_guard(cfg.phase_bits);
  return phase_encode(s, guard);
}

}  // namespace

std::complex<double> kernel_amplitude(double phase, std::uint64_t bin, int phase_bits) {
  if (phase_bits < 1 || phase_bits > 24)
    throw ValidationError("phase_bits out of range [1, 24]");
  const double bins = std::ldexp(1.0, phase_bits);
  const double delta = phase - kTwoPi * static_cast<double>(bin) / bins;
  const double half = 0.5 * delta;
  const double s = std::sin(half);
  // delta in {0, +-2 pi}: every term of the geometric sum equals 1.
  if (s == 0.0) return {1.0, 0.0};
  const double magnitude = std::sin(bins * half) / (bins * s);
  return std::polar(magnitude, (bins - 1.0) * half);
}

JointDistribution run_spectral(const Spectrum& s, const AlphaVector& a, const QpeConfig& cfg) {
  const Eigen::Index n = s.order();
  if ((static_cast<std::uint64_t>(n) & (static_cast<std::uint64_t>(n) - 1)) != 0)
    throw ValidationError("spectral engine requires a power-of-two order");
  if (cfg.phase_bits < 1 || cfg.phase_bits > 24)
    throw ValidationError("spectral engine: phase_bits out of range [1, 24]");

  const PhaseMap map = resolve_phase_map(s, cfg);
  const Eigen::Index bins = Eigen::Index{1} << cfg.phase_bits;

  // Row j of B is alpha_j times eigenvector j expressed in the output basis.
  Eigen::MatrixXd b = a.alphas.asDiagonal() * s.eigenvectors.transpose();
  if (cfg.output_hadamards) hadamard_rows(b);

  Eigen::MatrixXcd kernel(bins, n);
  for (Eigen::Index k = 0; k < bins; ++k)
    for (Eigen::Index j = 0; j < n; ++j)
      kernel(k, j) = kernel_amplitude(map.phases(j), static_cast<std::uint64_t>(k),
                                      cfg.phase_bits);

  const Eigen::MatrixXcd amplitudes = kernel * b.cast<std::complex<double>>();

  JointDistribution d;
  d.probs = clamp_probs(amplitudes);
  d.hadamard_basis = cfg.output_hadamards;
  d.phase_map = map;
  d.phase_bits = cfg.phase_bits;
  return d;
}

JointDistribution run_dense(const SymmetricMatrix& m, const QpeConfig& cfg) {
  const int system_qubits = m.qubit_count();
  if (system_qubits > 8) throw ValidationError("dense engine caps the system at 8 qubits");
  if (cfg.phase_bits < 1 || cfg.phase_bits > 12)
    throw ValidationError("dense engine: phase_bits out of range [1, 12]");
  if (cfg.phase_bits + system_qubits > 20)
    throw ValidationError("dense engine: joint state exceeds 2^20 amplitudes");

  const Spectrum spectrum = eigendecompose(m);
  const PhaseMap map = resolve_phase_map(spectrum, cfg);
  const Eigen::Index n = m.order();
  const Eigen::Index bins = Eigen::Index{1} << cfg.phase_bits;

  // Hadamards on every qubit: uniform joint state.
  Eigen::MatrixXcd state = Eigen::MatrixXcd::Constant(
      bins, n, 1.0 / std::sqrt(static_cast<double>(bins * n)));

  // Controlled U^{2^j}, synthesized exactly from the spectrum. U is complex
  // symmetric (V real), so right-multiplying rows applies it correctly.
  for (int j = 0; j < cfg.phase_bits; ++j) {
    Eigen::VectorXcd twisted(n);
    for (Eigen::Index e = 0; e < n; ++e)
      twisted(e) = std::polar(1.0, std::ldexp(map.phases(e), j));
    const Eigen::MatrixXcd u_pow = spectrum.eigenvectors.cast<std::complex<double>>() *
                                   twisted.asDiagonal() *
                                   spectrum.eigenvectors.transpose().cast<std::complex<double>>();
    for (Eigen::Index x = 0; x < bins; ++x)
      if (x & (Eigen::Index{1} << j)) state.row(x) = state.row(x) * u_pow;
  }

  // Inverse QFT on the phase register: inverse DFT along the bin axis.
  std::vector<std::complex<double>> column(static_cast<std::size_t>(bins));
  const double inv_sqrt_bins = 1.0 / std::sqrt(static_cast<double>(bins));
  for (Eigen::Index b = 0; b < n; ++b) {
    for (Eigen::Index x = 0; x < bins; ++x) column[static_cast<std::size_t>(x)] = state(x, b);
    dft_forward(column);
    for (Eigen::Index k = 0; k < bins; ++k)
      state(k, b) = column[static_cast<std::size_t>(k)] * inv_sqrt_bins;
  }

  if (cfg.output_hadamards) hadamard_rows(state);

  JointDistribution d;
  d.probs = clamp_probs(state);
  d.hadamard_basis = cfg.output_hadamards;
  d.phase_map = map;
  d.phase_bits = cfg.phase_bits;
  return d;
}

MeasurementSummary condition_on_zero(const JointDistribution& d) {
  if (!d.hadamard_basis)
    throw ValidationError("condition_on_zero needs a distribution built with output Hadamards");

  MeasurementSummary summary;
  summary.p_zero = d.probs.col(0).sum();
  summary.phase_marginal = d.probs.rowwise().sum();
  if (summary.p_zero < 1e-300)
    throw DegenerateConditioning("zero-outcome probability vanishes");
  summary.conditional_phase_dist = d.probs.col(0) / summary.p_zero;
  summary.conditional_phase_dist.maxCoeff(&summary.top_bin);
  const double phase =
      kTwoPi * static_cast<double>(summary.top_bin) / static_cast<double>(d.bins());
  summary.eigenvalue_estimate = d.phase_map.eigenvalue_at(phase);
  return summary;
}

std::vector<std::uint64_t> sample(const JointDistribution& d, std::uint64_t shots,
                                  std::uint64_t seed) {
  if (shots < 1) throw ValidationError("sample needs at least one shot");

  const Eigen::Index cells = d.probs.size();
  std::vector<double> cdf(static_cast<std::size_t>(cells));
  double acc = 0.0;
  for (Eigen::Index k = 0; k < d.probs.rows(); ++k)
    for (Eigen::Index b = 0; b < d.probs.cols(); ++b) {
      acc += d.probs(k, b);
      cdf[static_cast<std::size_t>(k * d.probs.cols() + b)] = acc;
    }

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(cells), 0);
  Rng rng(seed);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = rng.uniform() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t cell = it == cdf.end() ? cdf.size() - 1
                                             : static_cast<std::size_t>(it - cdf.begin());
    ++counts[cell];
  }
  return counts;
}

}  // namespace qpea
