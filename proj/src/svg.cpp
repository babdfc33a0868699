#include "ptvarfima/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ptvarfima {

namespace {

constexpr double kWidth = 880.0, kHeight = 560.0;
constexpr double kLeft = 72.0, kRight = 30.0, kTop = 48.0, kBottom = 58.0;

std::string num(double v, const char* fmt = "%.2f") {
  char buf[48];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

// largest of {1, 2, 5} * 10^k not exceeding span/target
double nice_step(double span, int target_ticks) {
  const double raw = span / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {5.0, 2.0, 1.0})
    if (m * mag <= raw) return m * mag;
  return mag;
}

}  // namespace

void write_line_plot_svg(std::ostream& out, const std::string& title,
                         const std::string& x_label,
                         const std::string& y_label,
                         const std::vector<PlotSeries>& series) {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool have = false;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size())
      throw std::invalid_argument("plot series: x/y size mismatch");
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (!have) {
        xmin = xmax = s.x[k];
        ymin = ymax = s.y[k];
        have = true;
      } else {
        xmin = std::min(xmin, s.x[k]);
        xmax = std::max(xmax, s.x[k]);
        ymin = std::min(ymin, s.y[k]);
        ymax = std::max(ymax, s.y[k]);
      }
    }
  }
  if (!have) throw std::invalid_argument("plot series: no data");
  ymin = std::min(ymin, 0.0);
  if (ymax <= ymin) ymax = ymin + 1.0;
  ymax += 0.05 * (ymax - ymin);
  if (xmax <= xmin) xmax = xmin + 1.0;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) {
    return kTop + ph - (y - ymin) / (ymax - ymin) * ph;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth, "%.0f")
      << "\" height=\"" << num(kHeight, "%.0f") << "\" viewBox=\"0 0 "
      << num(kWidth, "%.0f") << ' ' << num(kHeight, "%.0f") << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(kWidth / 2) << "\" y=\"26\" font-family=\"sans-serif\""
      << " font-size=\"16\" text-anchor=\"middle\">" << title << "</text>\n";

  const double xstep = nice_step(xmax - xmin, 8);
  const double ystep = nice_step(ymax - ymin, 6);
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9 * xstep;
       x += xstep) {
    out << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(kTop) << "\" x2=\""
        << num(px(x)) << "\" y2=\"" << num(kTop + ph)
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << num(px(x)) << "\" y=\"" << num(kTop + ph + 16)
        << "\" text-anchor=\"middle\">" << num(x, "%.6g") << "</text>\n";
  }
  for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-9 * ystep;
       y += ystep) {
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(y)) << "\" x2=\""
        << num(kLeft + pw) << "\" y2=\"" << num(py(y))
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(y) + 4)
        << "\" text-anchor=\"end\">" << num(y, "%.6g") << "</text>\n";
  }
  out << "</g>\n";

  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + ph)
      << "\" x2=\"" << num(kLeft + pw) << "\" y2=\"" << num(kTop + ph)
      << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\""
      << num(kLeft) << "\" y2=\"" << num(kTop + ph)
      << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  out << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\""
      << num(kHeight - 16)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
      << x_label << "</text>\n";
  out << "<text x=\"18\" y=\"" << num(kTop + ph / 2)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\""
      << " transform=\"rotate(-90 18 " << num(kTop + ph / 2) << ")\">" << y_label
      << "</text>\n";

  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.8\" points=\"";
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (k) out << ' ';
      out << num(px(s.x[k])) << ',' << num(py(s.y[k]));
    }
    out << "\"/>\n";
  }

  double ly = kTop + 10.0;
  for (const auto& s : series) {
    const double lx = kLeft + pw - 170.0;
    out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(lx + 26) << "\" y2=\"" << num(ly) << "\" stroke=\"" << s.color
        << "\" stroke-width=\"1.8\"/>\n";
    out << "<text x=\"" << num(lx + 32) << "\" y=\"" << num(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label
        << "</text>\n";
    ly += 18.0;
  }
  out << "</svg>\n";
}

}  // namespace ptvarfima
