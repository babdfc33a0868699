// Minimal deterministic SVG line plots. The plot is a thin rendering of
// already-computed CSV data, never a separate computation path.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptvarfima {

struct PlotSeries {
  std::string label;
  std::string color;       // SVG color, e.g. "#1f77b4"
  std::vector<double> x;
  std::vector<double> y;
};

void write_line_plot_svg(std::ostream& out, const std::string& title,
                         const std::string& x_label,
                         const std::string& y_label,
                         const std::vector<PlotSeries>& series);

}  // namespace ptvarfima
