#include "ptvarfima/figures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ptvarfima/acvf.hpp"

namespace ptvarfima {

FigureCurves figure_curves(const PtvArfimaModel& model, int max_lag) {
  if (max_lag < 0)
    throw std::invalid_argument("figure_curves: max_lag must be >= 0");
  FigureCurves fc{model, max_lag, {}, {}};
  const int p = model.period();
  fc.gamma.assign(static_cast<std::size_t>(p),
                  std::vector<double>(static_cast<std::size_t>(max_lag) + 1));
  fc.rho = fc.gamma;
  for (int s = 1; s <= p; ++s) {
    const SeasonIndex i(s);
    auto& g = fc.gamma[static_cast<std::size_t>(s - 1)];
    auto& r = fc.rho[static_cast<std::size_t>(s - 1)];
    for (int h = 0; h <= max_lag; ++h)
      g[static_cast<std::size_t>(h)] = acvf_signed(model, i, -h);
    for (int h = 0; h <= max_lag; ++h)
      r[static_cast<std::size_t>(h)] = g[static_cast<std::size_t>(h)] / g[0];
  }
  return fc;
}

FigureChecks check_figure_claims(const FigureCurves& curves) {
  const int p = curves.model.period();
  const int max_lag = curves.max_lag;
  FigureChecks checks;

  checks.all_positive = true;
  for (const auto& g : curves.gamma)
    for (double v : g)
      if (!(v > 0.0)) checks.all_positive = false;

  // order the seasons by d and require the same pointwise order of curves
  std::vector<int> by_d(static_cast<std::size_t>(p));
  for (int s = 0; s < p; ++s) by_d[static_cast<std::size_t>(s)] = s;
  std::sort(by_d.begin(), by_d.end(), [&](int a, int b) {
    return curves.model.d()[static_cast<std::size_t>(a)] <
           curves.model.d()[static_cast<std::size_t>(b)];
  });
  checks.ordered_by_d = true;
  for (int h = 1; h <= max_lag; ++h)
    for (int k = 0; k + 1 < p; ++k) {
      const auto& lo = curves.gamma[static_cast<std::size_t>(by_d[k])];
      const auto& hi = curves.gamma[static_cast<std::size_t>(by_d[k + 1])];
      if (!(lo[static_cast<std::size_t>(h)] < hi[static_cast<std::size_t>(h)]))
        checks.ordered_by_d = false;
    }

  checks.monotone_per_residue = true;
  for (const auto& g : curves.gamma)
    for (int residue = 0; residue < p; ++residue) {
      int h = residue == 0 ? p : residue;  // first lag >= 1 in the class
      for (; h + p <= max_lag; h += p)
        if (!(g[static_cast<std::size_t>(h + p)] <
              g[static_cast<std::size_t>(h)]))
          checks.monotone_per_residue = false;
    }

  checks.max_gap = 0.0;
  const auto& lo = curves.gamma[static_cast<std::size_t>(by_d.front())];
  const auto& hi = curves.gamma[static_cast<std::size_t>(by_d.back())];
  for (int h = 1; h <= max_lag; ++h)
    checks.max_gap =
        std::max(checks.max_gap, std::fabs(hi[static_cast<std::size_t>(h)] -
                                           lo[static_cast<std::size_t>(h)]));
  return checks;
}

}  // namespace ptvarfima
