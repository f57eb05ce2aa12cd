#pragma once

#include <cmath>

#include "qpea/spectrum.hpp"

namespace qpea {

// Affine encoding of eigenvalues into eigenphases of U = e^{i t (H - lambda_min I)}.
// The guard keeps the largest phase strictly below 2*pi so no eigenvalue
// aliases across the phase wrap.
struct PhaseMap {
  double scale = 1.0;   // t, radians per eigenvalue unit
  double offset = 0.0;  // lambda_min, subtracted before scaling
  double guard = 0.0;   // delta in [0, 1)
  Eigen::VectorXd phases;

  double eigenvalue_at(double phase) const { return phase / scale + offset; }
};

inline double default_guard(int phase_bits) { return std::ldexp(1.0, -phase_bits); }

// Degenerate spectra (all eigenvalues equal) map to phase 0 with t = 1.
PhaseMap phase_encode(const Spectrum& s, double guard);

}  // namespace qpea
