#include "qpea/generators.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qpea/rng.hpp"
#include "qpea/structure.hpp"

namespace qpea {
namespace {

void merge_term(std::vector<PauliTerm>& terms, std::uint64_t mask, double coeff) {
  for (auto& t : terms) {
    if (t.mask == mask) {
      t.coeff += coeff;
      return;
    }
  }
  terms.push_back({mask, coeff});
}

}  // namespace

void LocalHamiltonianSpec::add_x(std::uint64_t mask, double coeff) {
  merge_term(x_terms, mask, coeff);
}

void LocalHamiltonianSpec::add_z(std::uint64_t mask, double coeff) {
  merge_term(z_terms, mask, coeff);
}

void LocalHamiltonianSpec::validate() const {
  if (qubit_count < 1) throw ValidationError("local spec needs at least one qubit");
  const std::uint64_t all = (qubit_count >= 64) ? ~0ull : ((1ull << qubit_count) - 1);
  auto check = [&](const std::vector<PauliTerm>& terms, bool x_kind) {
    for (const auto& t : terms) {
      if (t.mask == 0) throw ValidationError("pauli mask must be nonzero");
      if ((t.mask & ~all) != 0) throw ValidationError("pauli mask exceeds qubit count");
      if (std::popcount(t.mask) > 3) throw ValidationError("pauli string acts on more than 3 qubits");
      if (x_kind && t.coeff < 0.0)
        throw ValidationError("X coefficients must be non-negative (stoquasticity)");
      if (!std::isfinite(t.coeff)) throw ValidationError("pauli coefficient must be finite");
    }
  };
  check(x_terms, true);
  check(z_terms, false);
}

void EnsembleConfig::validate() const {
  if (trial_count < 1) throw ValidationError("trial_count must be >= 1");
  if (!(density > 0.0 && density <= 1.0)) throw ValidationError("density must lie in (0, 1]");
  if (order < 2) throw ValidationError("ensemble order must be >= 2");
  if (kind != EnsembleKind::RandomSymmetric) {
    const auto n = static_cast<std::uint64_t>(order);
    if ((n & (n - 1)) != 0)
      throw ValidationError("local ensembles need a power-of-two order");
  }
}

SymmetricMatrix gen_random_symmetric(Eigen::Index order, double density,
                                     std::uint64_t seed, int* rejections) {
  if (order < 2) throw ValidationError("gen_random_symmetric needs order >= 2");
  if (!(density > 0.0 && density <= 1.0))
    throw ValidationError("density must lie in (0, 1]");

  for (int retry = 0; retry < 100; ++retry) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(retry));
    SymmetricMatrix m(order);
    for (Eigen::Index i = 0; i < order - 1; ++i) {
      for (Eigen::Index j = i + 1; j < order; ++j) {
        if (rng.uniform() < density) {
          double v = rng.uniform();
          while (v == 0.0) v = rng.uniform();
          m.set(i, j, v);
        }
      }
    }
    for (Eigen::Index i = 0; i < order; ++i) m.set(i, i, rng.normal());

    if (check_structure(m).irreducible) {
      if (rejections) *rejections = retry;
      return m;
    }
  }
  throw IrreducibleGenerationFailure(
      "no irreducible draw in 100 retries (order " + std::to_string(order) + ")");
}

LocalHamiltonianSpec gen_local_spec(int qubit_count, LocalModel model, std::uint64_t seed) {
  if (qubit_count < 3) throw ValidationError("gen_local_spec needs at least 3 qubits");

  LocalHamiltonianSpec spec;
  spec.qubit_count = qubit_count;
  spec.model = model;
  Rng rng(seed);

  if (model == LocalModel::H2) {
    for (int i = 0; i < qubit_count; ++i) {
      const std::uint64_t mask = 1ull << i;
      spec.add_x(mask, rng.uniform());
      spec.add_z(mask, rng.uniform(-1.0, 1.0));
    }
    for (int i = 0; i < qubit_count - 1; ++i) {
      for (int j = i + 1; j < qubit_count; ++j) {
        const std::uint64_t mask = (1ull << i) | (1ull << j);
        spec.add_x(mask, rng.uniform());
        spec.add_z(mask, rng.uniform(-1.0, 1.0));
      }
    }
  }
  for (int i = 0; i < qubit_count - 2; ++i) {
    for (int j = i + 1; j < qubit_count - 1; ++j) {
      for (int k = j + 1; k < qubit_count; ++k) {
        const std::uint64_t mask = (1ull << i) | (1ull << j) | (1ull << k);
        spec.add_x(mask, rng.uniform());
        spec.add_z(mask, rng.uniform(-1.0, 1.0));
      }
    }
  }
  spec.validate();
  return spec;
}

SymmetricMatrix build_local_hamiltonian(const LocalHamiltonianSpec& spec, int max_qubits) {
  spec.validate();
  if (spec.qubit_count > max_qubits)
    throw DimensionOverflow("qubit count " + std::to_string(spec.qubit_count) +
                            " exceeds cap " + std::to_string(max_qubits));

  const Eigen::Index n = Eigen::Index{1} << spec.qubit_count;
  SymmetricMatrix m(n);

  // An X-string with mask s is the permutation |a> -> |a ^ s>, so each term
  // adds its coefficient at (a, a ^ s); a Z-string contributes the parity
  // sign (-1)^{popcount(a & s)} on the diagonal.
  for (const auto& t : spec.x_terms) {
    for (Eigen::Index a = 0; a < n; ++a) {
      const auto b = static_cast<Eigen::Index>(static_cast<std::uint64_t>(a) ^ t.mask);
      if (a < b) m.add(a, b, t.coeff);
    }
  }
  for (Eigen::Index a = 0; a < n; ++a) {
    double diag = 0.0;
    for (const auto& t : spec.z_terms) {
      const int parity = std::popcount(static_cast<std::uint64_t>(a) & t.mask) & 1;
      diag += parity ? -t.coeff : t.coeff;
    }
    m.set(a, a, diag);
  }
  return m;
}

SymmetricMatrix make_trial_matrix(const EnsembleConfig& config, int trial) {
  config.validate();
  const std::uint64_t trial_seed =
      Rng::substream(config.seed, static_cast<std::uint64_t>(trial)).next_u64();
  switch (config.kind) {
    case EnsembleKind::RandomSymmetric:
      return gen_random_symmetric(config.order, config.density, trial_seed);
    case EnsembleKind::LocalH1:
    case EnsembleKind::LocalH2: {
      int qubits = 0;
      while ((Eigen::Index{1} << qubits) < config.order) ++qubits;
      const LocalModel model =
          config.kind == EnsembleKind::LocalH1 ? LocalModel::H1 : LocalModel::H2;
      return build_local_hamiltonian(gen_local_spec(qubits, model, trial_seed));
    }
  }
  throw ValidationError("unknown ensemble kind");
}

}  // namespace qpea
