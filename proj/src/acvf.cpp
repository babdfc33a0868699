#include "ptvarfima/acvf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ptvarfima/special_functions.hpp"

namespace ptvarfima {

namespace {

void require_lag(long long h, long long min_lag, const char* who) {
  if (h < min_lag)
    throw std::invalid_argument(std::string(who) + ": lag must be >= " +
                                std::to_string(min_lag));
}

double log_gamma_pos(double x) { return signed_log_gamma(x).log_abs; }

}  // namespace

const char* to_string(AcvfMethod method) {
  switch (method) {
    case AcvfMethod::exact: return "exact";
    case AcvfMethod::series: return "series";
    case AcvfMethod::asymptotic: return "asymptotic";
    case AcvfMethod::hypergeometric: return "hypergeometric";
  }
  return "unknown";
}

double acvf_exact(const PtvArfimaModel& model, SeasonIndex i, long long h) {
  require_lag(h, 0, "acvf_exact");
  const double di = model.d(i);
  const double dh = d_at_offset(model, i, h);
  const double s2 = model.sigma2(i);

  // sigma_i^2 * Gamma(1-d_i-d_{i+h}) / (Gamma(1-d_{i+h}) Gamma(1+h-d_i))
  //           * (d_{i+h})_h
  // The rising factorial (d_{i+h})_h is the Gamma(d_{i+h}+h)/Gamma(d_{i+h})
  // pair taken as a limit, which keeps d = 0 seasons finite.
  if (dh == 0.0 && h > 0) return 0.0;
  long double lg = static_cast<long double>(log_gamma_pos(1.0 - di - dh)) -
                   log_gamma_pos(1.0 - dh) -
                   log_gamma_pos(1.0 + static_cast<double>(h) - di);
  if (h > 0)
    lg += static_cast<long double>(
              log_gamma_pos(dh + static_cast<double>(h))) -
          log_gamma_pos(dh);
  return s2 * static_cast<double>(std::exp(lg));
}

double acvf_exact_p2(const PtvArfimaModel& model, SeasonIndex i, long long h) {
  if (model.period() != 2)
    throw std::invalid_argument("acvf_exact_p2 requires a period-2 model");
  require_lag(h, 0, "acvf_exact_p2");
  const double di = model.d(i);
  const double s2 = model.sigma2(i);

  if (h % 2 != 0) {
    // odd lags couple the two seasons
    const double dn = d_at_offset(model, i, 1);
    if (dn == 0.0) return 0.0;
    const long double lg =
        static_cast<long double>(log_gamma_pos(1.0 - di - dn)) +
        log_gamma_pos(dn + static_cast<double>(h)) - log_gamma_pos(dn) -
        log_gamma_pos(1.0 - dn) -
        log_gamma_pos(1.0 + static_cast<double>(h) - di);
    return s2 * static_cast<double>(std::exp(lg));
  }
  // even lags stay within season i
  if (di == 0.0) return h == 0 ? s2 : 0.0;
  const long double lg =
      static_cast<long double>(log_gamma_pos(1.0 - 2.0 * di)) +
      log_gamma_pos(di + static_cast<double>(h)) - log_gamma_pos(di) -
      log_gamma_pos(1.0 - di) -
      log_gamma_pos(1.0 + static_cast<double>(h) - di);
  return s2 * static_cast<double>(std::exp(lg));
}

double acvf_hypergeometric(const PtvArfimaModel& model, SeasonIndex i,
                           long long h) {
  require_lag(h, 0, "acvf_hypergeometric");
  const double di = model.d(i);
  const double dh = d_at_offset(model, i, h);
  const double s2 = model.sigma2(i);

  // sigma_i^2 * (d_{i+h})_h / h! * 2F1(d_i, d_{i+h}+h; 1+h; 1)
  if (dh == 0.0 && h > 0) return 0.0;
  double prefactor;
  if (h == 0) {
    prefactor = 1.0;
  } else {
    const long double lg =
        static_cast<long double>(log_gamma_pos(dh + static_cast<double>(h))) -
        log_gamma_pos(dh) - log_gamma_pos(static_cast<double>(h) + 1.0);
    prefactor = static_cast<double>(std::exp(lg));
  }
  const double f = gauss_2f1_at_one(di, dh + static_cast<double>(h),
                                    1.0 + static_cast<double>(h));
  return s2 * prefactor * f;
}

double acvf_series(const PtvArfimaModel& model, SeasonIndex i, long long h,
                   long long n_terms, NoiseConvention convention) {
  require_lag(h, 0, "acvf_series");
  if (n_terms < 1)
    throw std::invalid_argument("acvf_series: n_terms must be >= 1");
  const double di = model.d(i);
  const double dh = d_at_offset(model, i, h);
  const int p = model.period();

  // Per-term noise variances cycle with the season of the noise index
  // t - j; precompute one period of them, anchored at j = 0.
  std::vector<double> s2_cycle(static_cast<std::size_t>(p));
  for (int r = 0; r < p; ++r)
    s2_cycle[static_cast<std::size_t>(r)] = sigma2_at_offset(
        model, i, -static_cast<long long>(r));

  double psi_a = 1.0;  // psi_j^{(d_i)}
  double psi_b = 1.0;  // psi_{j+h}^{(d_{i+h})}
  for (long long j = 1; j <= h; ++j)
    psi_b *= (static_cast<double>(j) - 1.0 + dh) / static_cast<double>(j);

  long double acc = 0.0L;
  const bool per_term = convention == NoiseConvention::per_term;
  for (long long j = 0; j <= n_terms; ++j) {
    const double w =
        per_term ? s2_cycle[static_cast<std::size_t>(j % p)] : 1.0;
    acc += static_cast<long double>(psi_a) * psi_b * w;
    psi_a *= (static_cast<double>(j) + di) / (static_cast<double>(j) + 1.0);
    psi_b *= (static_cast<double>(j + h) + dh) /
             (static_cast<double>(j + h) + 1.0);
  }
  const double scale = per_term ? 1.0 : model.sigma2(i);
  return scale * static_cast<double>(acc);
}

double acf_exact(const PtvArfimaModel& model, SeasonIndex i, long long h) {
  require_lag(h, 0, "acf_exact");
  const double di = model.d(i);
  const double dh = d_at_offset(model, i, h);

  // Gamma(1-d_i)^2 Gamma(1-d_i-d_{i+h}) (d_{i+h})_h
  //   / (Gamma(1-2d_i) Gamma(1-d_{i+h}) Gamma(1+h-d_i))
  if (dh == 0.0 && h > 0) return 0.0;
  long double lg = 2.0L * log_gamma_pos(1.0 - di) +
                   log_gamma_pos(1.0 - di - dh) -
                   log_gamma_pos(1.0 - 2.0 * di) - log_gamma_pos(1.0 - dh) -
                   log_gamma_pos(1.0 + static_cast<double>(h) - di);
  if (h > 0)
    lg += static_cast<long double>(
              log_gamma_pos(dh + static_cast<double>(h))) -
          log_gamma_pos(dh);
  return static_cast<double>(std::exp(lg));
}

DecayLaw decay_law(const PtvArfimaModel& model, SeasonIndex i, int residue) {
  if (residue < 0 || residue >= model.period())
    throw std::invalid_argument("decay_law: residue must lie in [0, period)");
  const double di = model.d(i);
  const double dk = d_at_offset(model, i, residue);
  DecayLaw law;
  law.season = i.value();
  law.residue = residue;
  law.alpha = 1.0 - di - dk;
  // reciprocal_gamma keeps the degenerate d = 0 season finite (C = 0 there:
  // a white-noise target season has no covariance past lag 0).
  law.C = model.sigma2(i) * std::exp(log_gamma_pos(1.0 - di - dk)) *
          reciprocal_gamma(dk) * reciprocal_gamma(1.0 - dk);
  return law;
}

double acvf_asymptotic(const PtvArfimaModel& model, SeasonIndex i,
                       long long h) {
  require_lag(h, 1, "acvf_asymptotic");
  const int k = static_cast<int>(h % model.period());
  const DecayLaw law = decay_law(model, i, k);
  return law.C * std::exp(-law.alpha * std::log(static_cast<double>(h)));
}

double acvf_signed(const PtvArfimaModel& model, SeasonIndex i, long long h) {
  if (h >= 0) return acvf_exact(model, i, h);
  const SeasonIndex earlier =
      season_of(static_cast<long long>(i.value()) + h, model.period());
  return acvf_exact(model, earlier, -h);
}

double AcvfTable::gamma_at(int season, int lag) const {
  return gamma[static_cast<std::size_t>(season - 1)]
              [static_cast<std::size_t>(lag - first_lag)];
}

double AcvfTable::rho_at(int season, int lag) const {
  return rho[static_cast<std::size_t>(season - 1)]
            [static_cast<std::size_t>(lag - first_lag)];
}

AcvfTable acvf_table(const PtvArfimaModel& model, int max_lag,
                     AcvfMethod method, long long n_terms) {
  if (max_lag < 0)
    throw std::invalid_argument("acvf_table: max_lag must be >= 0");
  if (method == AcvfMethod::asymptotic && max_lag < 1)
    throw std::invalid_argument(
        "acvf_table: the asymptotic law is defined for lags >= 1");

  AcvfTable table{model, max_lag,
                  method == AcvfMethod::asymptotic ? 1 : 0, method,
                  method == AcvfMethod::series ? n_terms : 0, {}, {}};
  const int p = model.period();
  const int n_lags = max_lag - table.first_lag + 1;
  table.gamma.assign(static_cast<std::size_t>(p),
                     std::vector<double>(static_cast<std::size_t>(n_lags)));
  table.rho = table.gamma;

  for (int s = 1; s <= p; ++s) {
    const SeasonIndex i(s);
    auto& g = table.gamma[static_cast<std::size_t>(s - 1)];
    auto& r = table.rho[static_cast<std::size_t>(s - 1)];
    for (int h = table.first_lag; h <= max_lag; ++h) {
      double value = 0.0;
      switch (method) {
        case AcvfMethod::exact: value = acvf_exact(model, i, h); break;
        case AcvfMethod::series:
          value = acvf_series(model, i, h, n_terms);
          break;
        case AcvfMethod::asymptotic:
          value = acvf_asymptotic(model, i, h);
          break;
        case AcvfMethod::hypergeometric:
          value = acvf_hypergeometric(model, i, h);
          break;
      }
      g[static_cast<std::size_t>(h - table.first_lag)] = value;
    }
    const double var0 = method == AcvfMethod::asymptotic
                            ? acvf_exact(model, i, 0)
                            : g[0];
    for (int h = table.first_lag; h <= max_lag; ++h)
      r[static_cast<std::size_t>(h - table.first_lag)] =
          g[static_cast<std::size_t>(h - table.first_lag)] / var0;
  }
  return table;
}

}  // namespace ptvarfima
