#include "ptvarfima/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "ptvarfima/acvf.hpp"
#include "ptvarfima/estimate.hpp"
#include "ptvarfima/figures.hpp"
#include "ptvarfima/io.hpp"
#include "ptvarfima/model.hpp"
#include "ptvarfima/simulate.hpp"
#include "ptvarfima/special_functions.hpp"
#include "ptvarfima/svg.hpp"

namespace ptvarfima {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double rel_err(double got, double want) {
  const double scale = std::max(std::fabs(want), 1e-300);
  return std::fabs(got - want) / scale;
}

// Stationary ARFIMA(0,d,0) autocovariance, written out on its own so the
// reduction check does not reuse the periodic code path.
double stationary_arfima_acvf(double d, double sigma2, long long h) {
  if (d == 0.0) return h == 0 ? sigma2 : 0.0;
  const double hh = static_cast<double>(h);
  const long double lg = static_cast<long double>(
                             signed_log_gamma(1.0 - 2.0 * d).log_abs) +
                         signed_log_gamma(hh + d).log_abs -
                         signed_log_gamma(d).log_abs -
                         signed_log_gamma(1.0 - d).log_abs -
                         signed_log_gamma(hh + 1.0 - d).log_abs;
  return sigma2 * static_cast<double>(std::exp(lg));
}

double pearson_correlation(const std::vector<double>& a,
                           const std::vector<double>& b) {
  const std::size_t n = a.size();
  long double ma = 0.0L, mb = 0.0L;
  for (std::size_t k = 0; k < n; ++k) {
    ma += a[k];
    mb += b[k];
  }
  ma /= n;
  mb /= n;
  long double saa = 0.0L, sbb = 0.0L, sab = 0.0L;
  for (std::size_t k = 0; k < n; ++k) {
    const long double da = a[k] - ma;
    const long double db = b[k] - mb;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  return static_cast<double>(sab / std::sqrt(saa * sbb));
}

class Runner {
 public:
  explicit Runner(VerifyOptions opt) : opt_(opt) {
    if (opt_.quick) {
      opt_.replicates = std::min(opt_.replicates, 400);
      opt_.mc_n = std::min(opt_.mc_n, 512);
      opt_.truncation = std::min(opt_.truncation, 2000);
      opt_.series_terms = std::min<long long>(opt_.series_terms, 200000);
      opt_.inversion_n = std::min(opt_.inversion_n, 6000);
    }
  }

  std::vector<CheckResult> run() {
    set_gamma_corruption(opt_.gamma_corruption);
    route_agreement();
    series_oracle();
    stationary_reduction();
    p2_split();
    asymptotic_law();
    figure_claims();
    monte_carlo();
    shift_invariance();
    inversion();
    determinism();
    set_gamma_corruption(0.0);
    return std::move(results_);
  }

 private:
  void add(int criterion, std::string name, std::string expected,
           std::string got, double tol, bool pass, bool diagnostic = false) {
    results_.push_back({criterion, std::move(name), std::move(expected),
                        std::move(got), tol, pass, diagnostic});
  }

  // exact vs hypergeometric, both figure models, all seasons, h <= 100
  void route_agreement() {
    double worst = 0.0;
    for (const auto& m : {figure1_model(), figure2_model()})
      for (int s = 1; s <= m.period(); ++s)
        for (long long h = 0; h <= 100; ++h)
          worst = std::max(worst,
                           rel_err(acvf_hypergeometric(m, SeasonIndex(s), h),
                                   acvf_exact(m, SeasonIndex(s), h)));
    add(1, "closed form vs hypergeometric route, h<=100",
        "rel err <= " + fmt(opt_.tol_pair), "max rel err " + fmt(worst),
        opt_.tol_pair, worst <= opt_.tol_pair);
  }

  // truncated product-sum oracle vs closed form
  void series_oracle() {
    struct Case {
      PtvArfimaModel model;
      double tol;
      const char* label;
    };
    const Case cases[] = {
        {figure1_model(), opt_.tol_series_slow, "series oracle, d=(0.3,0.4), h<=20"},
        {new_model(2, {0.05, 0.10}, {1.0, 1.0}), opt_.tol_series_fast,
         "series oracle, d=(0.05,0.10), h<=20"},
    };
    for (const auto& c : cases) {
      double worst = 0.0;
      double worst_corrected = 0.0;
      for (int s = 1; s <= c.model.period(); ++s)
        for (long long h = 0; h <= 20; ++h) {
          const double exact = acvf_exact(c.model, SeasonIndex(s), h);
          const double series =
              acvf_series(c.model, SeasonIndex(s), h, opt_.series_terms);
          worst = std::max(worst, rel_err(series, exact));
          // integral estimate of the dropped tail
          //   sum_{j>N} psi_j psi_{j+h} ~ N^{d_i+d_{i+h}-1}
          //     / ((1-d_i-d_{i+h}) Gamma(d_i) Gamma(d_{i+h}))
          const double di = c.model.d(SeasonIndex(s));
          const double dh = d_at_offset(c.model, SeasonIndex(s), h);
          double corrected = series;
          if (di > 0.0 && dh > 0.0) {
            const double n = static_cast<double>(opt_.series_terms);
            corrected += c.model.sigma2(SeasonIndex(s)) *
                         std::pow(n, di + dh - 1.0) /
                         ((1.0 - di - dh) *
                          std::exp(signed_log_gamma(di).log_abs) *
                          std::exp(signed_log_gamma(dh).log_abs));
          }
          worst_corrected = std::max(worst_corrected, rel_err(corrected, exact));
        }
      add(2, c.label, "rel err <= " + fmt(c.tol), "max rel err " + fmt(worst),
          c.tol, worst <= c.tol);
      add(2, std::string("tail-corrected series agreement (informational), ") +
                 (c.tol == opt_.tol_series_slow ? "d=(0.3,0.4)"
                                                : "d=(0.05,0.10)"),
          "series + analytic tail tracks the closed form",
          "max rel err " + fmt(worst_corrected), 0.0, true, true);
    }
  }

  // equal memory parameters collapse to the stationary ARFIMA(0,d,0) forms
  void stationary_reduction() {
    const double d = 0.3;
    for (int p : {1, 2, 3}) {
      const PtvArfimaModel m(p, std::vector<double>(p, d),
                             std::vector<double>(p, 1.0));
      double worst_rho1 = 0.0, worst_acvf = 0.0;
      for (int s = 1; s <= p; ++s) {
        worst_rho1 = std::max(
            worst_rho1,
            rel_err(acf_exact(m, SeasonIndex(s), 1), d / (1.0 - d)));
        for (long long h = 0; h <= 50; ++h)
          worst_acvf = std::max(worst_acvf,
                                rel_err(acvf_exact(m, SeasonIndex(s), h),
                                        stationary_arfima_acvf(d, 1.0, h)));
      }
      add(3, "stationary reduction rho(1)=d/(1-d), p=" + std::to_string(p),
          "rel err <= " + fmt(opt_.tol_pair), "rel err " + fmt(worst_rho1),
          opt_.tol_pair, worst_rho1 <= opt_.tol_pair);
      add(3, "stationary reduction acvf, h<=50, p=" + std::to_string(p),
          "rel err <= " + fmt(opt_.tol_pair), "max rel err " + fmt(worst_acvf),
          opt_.tol_pair, worst_acvf <= opt_.tol_pair);
    }
  }

  // period-2 odd/even branches equal the general closed form
  void p2_split() {
    double worst = 0.0;
    for (const auto& m : {figure1_model(), figure2_model()})
      for (int s = 1; s <= 2; ++s)
        for (long long h = 0; h <= 200; ++h)
          worst = std::max(worst, rel_err(acvf_exact_p2(m, SeasonIndex(s), h),
                                          acvf_exact(m, SeasonIndex(s), h)));
    add(4, "period-2 odd/even split vs general form, h<=200",
        "rel err <= " + fmt(opt_.tol_pair), "max rel err " + fmt(worst),
        opt_.tol_pair, worst <= opt_.tol_pair);
  }

  // gamma(h) h^alpha / C -> 1 along every residue class
  void asymptotic_law() {
    const auto m = figure1_model();
    for (const auto& [h_base, tol] :
         {std::pair<long long, double>{10000, opt_.tol_asym_1e4},
          std::pair<long long, double>{1000000, opt_.tol_asym_1e6}}) {
      double worst = 0.0;
      for (int s = 1; s <= m.period(); ++s)
        for (int k = 0; k < m.period(); ++k) {
          long long h = h_base + ((k - h_base) % m.period() + m.period()) %
                                     m.period();  // h = k (mod p), h >= h_base
          const DecayLaw law = decay_law(m, SeasonIndex(s), k);
          const double ratio =
              acvf_exact(m, SeasonIndex(s), h) *
              std::exp(law.alpha * std::log(static_cast<double>(h))) / law.C;
          worst = std::max(worst, std::fabs(ratio - 1.0));
        }
      add(5, "hyperbolic decay law at h~" + std::to_string(h_base),
          "|gamma*h^alpha/C - 1| <= " + fmt(tol), "max " + fmt(worst), tol,
          worst <= tol);
    }
  }

  void figure_claims() {
    const auto fig1 = figure_curves(figure1_model(), 100);
    const auto fig2 = figure_curves(figure2_model(), 100);
    const auto c1 = check_figure_claims(fig1);
    const auto c2 = check_figure_claims(fig2);
    add(6, "fig1 curve ordering by d, 1<=h<=100", "season curves ordered",
        c1.ordered_by_d ? "ordered" : "violated", 0.0, c1.ordered_by_d);
    add(6, "figures positive and decreasing per residue class",
        "positive, monotone",
        std::string(c1.all_positive && c2.all_positive ? "positive" : "sign violation") +
            ", " +
            (c1.monotone_per_residue && c2.monotone_per_residue ? "monotone"
                                                                : "not monotone"),
        0.0,
        c1.all_positive && c2.all_positive && c1.monotone_per_residue &&
            c2.monotone_per_residue);
    add(6, "season gap: fig2 exceeds fig1",
        "max gap fig2 > max gap fig1",
        "fig1 " + fmt(c1.max_gap) + ", fig2 " + fmt(c2.max_gap), 0.0,
        c2.max_gap > c1.max_gap);
  }

  // Ensemble of truncated-MA paths against the closed forms. Two bands:
  //  (a) the ensemble scatter band (single-replicate standard error) around
  //      the exact closed form, and
  //  (b) the sharp band, 3 standard errors of the ensemble mean, around the
  //      truncation-adjusted expectation sum_{j<=M-h} psi_j psi_{j+h},
  //      which is the exact mean of the zero-centered estimator.
  // A diagnostic row reports the strict z against the exact closed form,
  // where the M^{2d-1} truncation tail dominates by construction.
  void monte_carlo() {
    const auto m = figure1_model();
    const int R = opt_.replicates;
    ensemble_ = simulate_ensemble(m, opt_.mc_n, opt_.truncation,
                                  opt_.truncation, R, opt_.seed, opt_.threads);

    const int H = opt_.mc_max_lag;
    std::vector<std::vector<std::vector<double>>> ghat(
        2, std::vector<std::vector<double>>(static_cast<std::size_t>(H) + 1));
    for (const auto& rep : ensemble_.replicates) {
      const auto stats = sample_periodic_acvf(rep.values, m.period(), H,
                                              Centering::zero);
      for (int s = 1; s <= 2; ++s)
        for (int h = 0; h <= H; ++h)
          ghat[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(h)]
              .push_back(stats.gamma_at(s, h));
    }

    double worst_scatter = 0.0, worst_sharp = 0.0, worst_strict = 0.0;
    for (int s = 1; s <= 2; ++s)
      for (int h = 0; h <= H; ++h) {
        const auto& v =
            ghat[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(h)];
        long double acc = 0.0L;
        for (double u : v) acc += u;
        const double mean = static_cast<double>(acc / v.size());
        long double var_acc = 0.0L;
        for (double u : v) var_acc += (u - mean) * (u - mean);
        const double sd = std::sqrt(static_cast<double>(var_acc) /
                                    (static_cast<double>(v.size()) - 1.0));
        const double se_mean = sd / std::sqrt(static_cast<double>(v.size()));

        const double exact = acvf_exact(m, SeasonIndex(s), h);
        const double truncated = acvf_series(m, SeasonIndex(s), h,
                                             opt_.truncation - h);
        worst_scatter =
            std::max(worst_scatter, std::fabs(mean - exact) / sd);
        worst_sharp =
            std::max(worst_sharp, std::fabs(mean - truncated) / se_mean);
        worst_strict =
            std::max(worst_strict, std::fabs(mean - exact) / se_mean);
      }
    add(7, "ensemble mean within scatter band of closed form, h<=5",
        "|mean - exact| <= " + fmt(opt_.mc_band) + " ensemble sd",
        "max " + fmt(worst_scatter) + " sd", opt_.mc_band,
        worst_scatter <= opt_.mc_band);
    add(7, "ensemble mean vs truncation-adjusted expectation, h<=5",
        "|mean - truncated theory| <= " + fmt(opt_.mc_band) + " SE of mean",
        "max " + fmt(worst_sharp) + " SE", opt_.mc_band,
        worst_sharp <= opt_.mc_band);
    add(7, "truncation bias against exact form (informational)",
        "dominated by the M^{2d-1} tail",
        fmt(worst_strict) + " SE of mean", 0.0, true, true);
  }

  void shift_invariance() {
    std::vector<std::span<const double>> paths;
    paths.reserve(ensemble_.replicates.size());
    for (const auto& rep : ensemble_.replicates) paths.emplace_back(rep.values);

    const auto pos = periodicity_check_ensemble(paths, 2, 12,
                                                opt_.periodicity_threshold);
    add(8, "shift-invariance diagnostic at true period p=2",
        "max |z| <= " + fmt(opt_.periodicity_threshold),
        "max |z| = " + fmt(pos.max_abs_z), opt_.periodicity_threshold,
        pos.consistent);
    const auto neg = periodicity_check_ensemble(paths, 3, 12,
                                                opt_.periodicity_threshold);
    add(8, "shift-invariance diagnostic flags p=3",
        "max |z| > " + fmt(opt_.periodicity_threshold),
        "max |z| = " + fmt(neg.max_abs_z), opt_.periodicity_threshold,
        !neg.consistent);
  }

  // Composition coefficient of the pi-weighted inverse applied to the
  // truncated causal path; the tail vanishes only when every season shares
  // d, so for distinct d the round-trip correlation plateaus below 1
  // independent of the truncation.
  static double inversion_wedge(const PtvArfimaModel& m, int i, int M,
                                int m_max) {
    const int p = m.period();
    std::vector<std::vector<double>> psi, pi;
    for (int s = 1; s <= p; ++s) {
      psi.push_back(psi_coeffs(m.d(SeasonIndex(s)), m_max).values);
      pi.push_back(pi_coeffs(m.d(SeasonIndex(s)), m_max).values);
    }
    const auto& pw = pi[static_cast<std::size_t>(i - 1)];
    long double v = 0.0L;
    for (int q = 1; q <= m_max; ++q) {
      long double K = 0.0L;
      for (int j = std::max(0, q - M); j <= std::min(q, M); ++j) {
        const int src = season_of(static_cast<long long>(i) - j, p).value();
        K += static_cast<long double>(pw[static_cast<std::size_t>(j)]) *
             psi[static_cast<std::size_t>(src - 1)]
                [static_cast<std::size_t>(q - j)];
      }
      v += K * K;
    }
    return static_cast<double>(v);
  }

  double round_trip_correlation(const PtvArfimaModel& m, int n, int M,
                                std::uint64_t seed) {
    const auto path = simulate_path(m, n, M, M, seed);
    const auto res = residuals(m, path, M);
    std::vector<double> truth(res.values.size());
    for (std::size_t k = 0; k < truth.size(); ++k)
      truth[k] = path.noise_at(res.first_t + static_cast<long long>(k));
    return pearson_correlation(res.values, truth);
  }

  void inversion() {
    const auto m = figure1_model();
    const int M = opt_.truncation;
    const double corr =
        round_trip_correlation(m, opt_.inversion_n, M, opt_.seed ^ 0xABCDEFULL);
    add(9, "inversion round-trip correlation on interior points",
        "corr >= " + fmt(opt_.inversion_min_corr), "corr = " + fmt(corr),
        opt_.inversion_min_corr, corr >= opt_.inversion_min_corr);

    // the pi filter is the exact inverse only under a season-constant d;
    // report the structural plateau the measured value is pinned to
    const int m_max = std::min(6 * M, 30000);
    const double vbar = 0.5 * (inversion_wedge(m, 1, M, m_max) +
                               inversion_wedge(m, 2, M, m_max));
    add(9, "round-trip plateau from the operator composition",
        "corr ~ " + fmt(1.0 / std::sqrt(1.0 + vbar)) +
            " for distinct seasonal d, any truncation",
        "corr = " + fmt(corr), 0.0, true, true);

    const auto flat = new_model(2, {0.3, 0.3}, {1.0, 1.0});
    const double flat_corr = round_trip_correlation(
        flat, std::min(opt_.inversion_n, 8000), std::min(M, 2000),
        opt_.seed ^ 0xF00DULL);
    add(9, "round-trip with season-constant d (truncation error only)",
        "corr >= 0.999", "corr = " + fmt(flat_corr), 0.999,
        flat_corr >= 0.999);
  }

  void determinism() {
    const auto m = figure1_model();
    const auto a = simulate_path(m, 64, 128, 128, opt_.seed);
    const auto b = simulate_path(m, 64, 128, 128, opt_.seed);
    const bool paths_equal = a.values == b.values && a.noise == b.noise;

    const auto e1 = simulate_ensemble(m, 32, 64, 64, 8, opt_.seed, 4);
    const auto e2 = simulate_ensemble(m, 32, 64, 64, 8, opt_.seed, 1);
    bool ensembles_equal = true;
    for (std::size_t r = 0; r < e1.replicates.size(); ++r)
      if (e1.replicates[r].values != e2.replicates[r].values)
        ensembles_equal = false;

    std::ostringstream f1, f2;
    for (auto* os : {&f1, &f2}) {
      const auto table = acvf_table(figure1_model(), 16, AcvfMethod::exact);
      write_acvf_csv(*os, table, true);
      const auto curves = figure_curves(figure1_model(), 100);
      std::vector<PlotSeries> series;
      for (int s = 1; s <= 2; ++s) {
        PlotSeries ps;
        ps.label = "season " + std::to_string(s);
        ps.color = s == 1 ? "#1f77b4" : "#d62728";
        for (int h = 0; h <= curves.max_lag; ++h) {
          ps.x.push_back(h);
          ps.y.push_back(curves.gamma[static_cast<std::size_t>(s - 1)]
                                     [static_cast<std::size_t>(h)]);
        }
        series.push_back(std::move(ps));
      }
      write_line_plot_svg(*os, "autocovariance", "lag", "gamma", series);
    }
    const bool bytes_equal = f1.str() == f2.str();

    add(10, "bit-identical replay of seeded paths",
        "identical values and noise", paths_equal ? "identical" : "diverged",
        0.0, paths_equal);
    add(10, "ensemble independent of thread schedule", "identical replicates",
        ensembles_equal ? "identical" : "diverged", 0.0, ensembles_equal);
    add(10, "byte-identical CSV/SVG emission", "identical bytes",
        bytes_equal ? "identical" : "diverged", 0.0, bytes_equal);
  }

  VerifyOptions opt_;
  std::vector<CheckResult> results_;
  Ensemble ensemble_{figure1_model(), {}, 0, 0, 0, 0};
};

}  // namespace

std::vector<CheckResult> run_verification(VerifyOptions options) {
  return Runner(options).run();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.diagnostic && !r.pass) return false;
  return true;
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  std::size_t name_w = 4;
  std::size_t exp_w = 8;
  std::size_t got_w = 3;
  for (const auto& r : results) {
    name_w = std::max(name_w, r.name.size());
    exp_w = std::max(exp_w, r.expected.size());
    got_w = std::max(got_w, r.got.size());
  }
  for (const auto& r : results) {
    std::ostringstream line;
    line << (r.diagnostic ? "[info] " : (r.pass ? "[pass] " : "[FAIL] "))
         << "c" << r.criterion << "  ";
    line << r.name;
    line << std::string(name_w - r.name.size() + 2, ' ');
    line << r.expected;
    line << std::string(exp_w - r.expected.size() + 2, ' ');
    line << r.got;
    if (r.tolerance > 0.0) {
      line << std::string(got_w - r.got.size() + 2, ' ');
      line << "(tol " << fmt(r.tolerance) << ")";
    }
    out << line.str() << '\n';
  }
}

}  // namespace ptvarfima
