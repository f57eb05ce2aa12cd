#pragma once

#include <cstdint>
#include <vector>

#include "qpea/matrix.hpp"

namespace qpea {

enum class LocalModel { H1, H2 };

struct PauliTerm {
  std::uint64_t mask = 0;  // qubit bitmask of the X- or Z-string
  double coeff = 0.0;
};

// Largest system the builder will materialize as a dense matrix.
inline constexpr int kMaxLocalQubits = 13;

// Stoquastic k-local Hamiltonian given as X- and Z-string terms. X
// coefficients must be non-negative; masks are nonzero with at most three
// bits set; repeated strings are merged on insertion.
struct LocalHamiltonianSpec {
  int qubit_count = 0;
  LocalModel model = LocalModel::H1;
  std::vector<PauliTerm> x_terms;
  std::vector<PauliTerm> z_terms;

  void add_x(std::uint64_t mask, double coeff);
  void add_z(std::uint64_t mask, double coeff);
  void validate() const;  // throws ValidationError
};

enum class EnsembleKind { RandomSymmetric, LocalH1, LocalH2 };

struct EnsembleConfig {
  EnsembleKind kind = EnsembleKind::RandomSymmetric;
  Eigen::Index order = 512;  // N; must be 2^n for the local kinds
  double density = 0.5;      // random-symmetric only
  int trial_count = 50;
  std::uint64_t seed = 0;

  void validate() const;
};

// Random symmetric matrix with non-negative off-diagonals: each strictly
// upper position present independently with the given probability, values
// uniform on (0,1), diagonal standard normal. Reducible draws are redrawn
// from a fresh substream, up to 100 retries.
SymmetricMatrix gen_random_symmetric(Eigen::Index order, double density,
                                     std::uint64_t seed, int* rejections = nullptr);

LocalHamiltonianSpec gen_local_spec(int qubit_count, LocalModel model, std::uint64_t seed);

SymmetricMatrix build_local_hamiltonian(const LocalHamiltonianSpec& spec,
                                        int max_qubits = kMaxLocalQubits);

// Deterministic per (config.seed, trial) dispatch used by the experiment
// harness; distinct trials draw from disjoint substreams.
SymmetricMatrix make_trial_matrix(const EnsembleConfig& config, int trial);

}  // namespace qpea
