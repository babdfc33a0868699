// The rendered autocovariance curves and the qualitative claims checked on
// them. Each season's curve is anchored at the observed point and looks back:
// curve_i(h) = Cov(X_{t-h}, X_t) with t in season i, i.e. acvf_signed(i, -h).
// That is the usual way periodic autocovariances are displayed, and it is the
// convention under which the "smaller d gives the lower curve" ordering holds
// at every lag; the forward-anchored gamma_i(h) of the acvf module swaps
// seasons at lags not divisible by p.
#pragma once

#include "ptvarfima/model.hpp"

#include <vector>

namespace ptvarfima {

struct FigureCurves {
  PtvArfimaModel model;
  int max_lag = 0;
  std::vector<std::vector<double>> gamma;  // [season-1][h], h = 0..max_lag
  std::vector<std::vector<double>> rho;    // gamma / season variance
};

FigureCurves figure_curves(const PtvArfimaModel& model, int max_lag);

struct FigureChecks {
  bool all_positive = false;
  // curves ordered by the season memory parameter at every lag >= 1
  bool ordered_by_d = false;
  // strictly decreasing along each residue class of the lag, per season
  bool monotone_per_residue = false;
  // largest vertical gap between the extreme-season curves over lags >= 1
  double max_gap = 0.0;
};

FigureChecks check_figure_claims(const FigureCurves& curves);

}  // namespace ptvarfima
