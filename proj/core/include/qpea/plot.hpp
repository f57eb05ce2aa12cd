#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "qpea/experiment.hpp"

namespace qpea {

// Estimated-vs-computed scatter, one panel per probability pair
// (alpha_1^2, P_reg2, P_reg1), y = x reference line, axes [0, 1].
// Self-contained text SVG, no external assets. Rejects empty tables.
void emit_plot(const std::vector<ReportRow>& rows, std::ostream& out);
void emit_plot(const std::vector<ReportRow>& rows, const std::filesystem::path& path);
void emit_plot(const ReportTable& table, const std::filesystem::path& path);

}  // namespace qpea
