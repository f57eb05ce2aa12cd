#pragma once

#include <utility>

#include "qpea/matrix.hpp"

namespace qpea {

// Entries at or below this magnitude carry no edge in the adjacency graph.
inline constexpr double kZeroEdgeTol = 1e-14;

struct StructureReport {
  bool offdiag_nonnegative = false;
  bool irreducible = false;
  bool strictly_positive = false;
};

// Structural predicates: sign pattern and connectivity of the off-diagonal
// graph. For a symmetric matrix strong connectivity reduces to plain
// connectivity, decided here by breadth-first search.
StructureReport check_structure(const SymmetricMatrix& m);

// Diagonal shift c = max(0, -min_i m(i,i)) making every entry non-negative.
// Eigenvectors are unchanged; eigenvalues move up by exactly c.
std::pair<SymmetricMatrix, double> nonneg_shift(const SymmetricMatrix& m);

}  // namespace qpea
