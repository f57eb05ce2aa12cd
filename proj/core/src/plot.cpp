#include "qpea/plot.hpp"

#include <cstdio>
#include <fstream>

namespace qpea {
namespace {

constexpr int kPanel = 280;   // drawable square per panel
constexpr int kMargin = 48;
constexpr int kGap = 36;

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

double panel_x(int panel, double value) {
  const int x0 = kMargin + panel * (kPanel + kGap);
  return x0 + value * kPanel;
}

double panel_y(double value) { return kMargin + (1.0 - value) * kPanel; }

}  // namespace

void emit_plot(const std::vector<ReportRow>& rows, std::ostream& out) {
  if (rows.empty()) throw ValidationError("refusing to plot an empty report table");

  const int width = kMargin * 2 + kPanel * 3 + kGap * 2;
  const int height = kMargin * 2 + kPanel + 24;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  const char* titles[3] = {"alpha1^2", "P_reg2", "P_reg1"};
  for (int p = 0; p < 3; ++p) {
    const double x0 = panel_x(p, 0.0);
    const double x1 = panel_x(p, 1.0);
    const double y0 = panel_y(0.0);
    const double y1 = panel_y(1.0);
    out << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << kPanel
        << "\" height=\"" << kPanel << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\""
        << y1 << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    out << "<text x=\"" << 0.5 * (x0 + x1) << "\" y=\"" << kMargin - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << titles[p] << "</text>\n";
    for (double tick : {0.0, 0.5, 1.0}) {
      out << "<text x=\"" << panel_x(p, tick) << "\" y=\"" << y0 + 16
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
          << fmt(tick) << "</text>\n";
      out << "<text x=\"" << x0 - 6 << "\" y=\"" << panel_y(tick) + 3
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
          << fmt(tick) << "</text>\n";
    }
    out << "<text x=\"" << 0.5 * (x0 + x1) << "\" y=\"" << y0 + 32
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << "computed</text>\n";
  }
  out << "<text x=\"" << kMargin - 34 << "\" y=\"" << panel_y(0.5)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" "
      << "transform=\"rotate(-90 " << kMargin - 34 << ' ' << panel_y(0.5) << ")\">"
      << "estimated</text>\n";

  auto clamp01 = [](double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); };
  for (const auto& row : rows) {
    if (row.failed) continue;
    const double computed[3] = {row.report.alpha1_sq, row.report.p_reg2,
                                row.report.p_reg1};
    const double estimated[3] = {row.report.alpha1_sq_est, row.report.p_reg2_est,
                                 row.report.p_reg1_est};
    for (int p = 0; p < 3; ++p) {
      out << "<circle cx=\"" << panel_x(p, clamp01(computed[p])) << "\" cy=\""
          << panel_y(clamp01(estimated[p]))
          << "\" r=\"3\" fill=\"none\" stroke=\"#1f4e9c\"/>\n";
    }
  }
  out << "</svg>\n";
}

void emit_plot(const std::vector<ReportRow>& rows, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  emit_plot(rows, out);
}

void emit_plot(const ReportTable& table, const std::filesystem::path& path) {
  emit_plot(table.rows, path);
}

}  // namespace qpea
