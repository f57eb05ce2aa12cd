#include "qpea/structure.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qpea {

StructureReport check_structure(const SymmetricMatrix& m) {
  const Eigen::Index n = m.order();
  StructureReport report;
  report.offdiag_nonnegative = true;
  report.strictly_positive = true;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      const double v = m(i, j);
      if (i != j && v < 0.0) report.offdiag_nonnegative = false;
      if (!(v > 0.0)) report.strictly_positive = false;
    }
  }

  // BFS over the nonzero off-diagonal pattern.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Eigen::Index> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Eigen::Index i = queue.back();
    queue.pop_back();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i || seen[j]) continue;
      if (std::abs(m(i, j)) > kZeroEdgeTol) {
        seen[j] = 1;
        ++reached;
        queue.push_back(j);
      }
    }
  }
  report.irreducible = reached == static_cast<std::size_t>(n);
  return report;
}

std::pair<SymmetricMatrix, double> nonneg_shift(const SymmetricMatrix& m) {
  const Eigen::Index n = m.order();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < j; ++i)
      if (m(i, j) < 0.0)
        throw ValidationError("nonneg_shift requires non-negative off-diagonals");

  double min_diag = m(0, 0);
  for (Eigen::Index i = 1; i < n; ++i) min_diag = std::min(min_diag, m(i, i));
  const double c = std::max(0.0, -min_diag);
  if (c == 0.0) return {m, 0.0};

  SymmetricMatrix shifted = m;
  for (Eigen::Index i = 0; i < n; ++i) shifted.set(i, i, m(i, i) + c);
  return {std::move(shifted), c};
}

}  // namespace qpea
