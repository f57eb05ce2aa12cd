#include "qpea/phase_map.hpp"

#include <numbers>

namespace qpea {

PhaseMap phase_encode(const Spectrum& s, double guard) {
  if (!(guard >= 0.0 && guard < 1.0))
    throw ValidationError("phase guard must lie in [0, 1)");

  PhaseMap map;
  map.guard = guard;
  const double lo = s.eigenvalues(0);
  const double hi = s.eigenvalues(s.order() - 1);
  map.offset = lo;
  map.scale = hi > lo ? 2.0 * std::numbers::pi * (1.0 - guard) / (hi - lo) : 1.0;
  map.phases = map.scale * (s.eigenvalues.array() - lo);
  return map;
}

}  // namespace qpea
