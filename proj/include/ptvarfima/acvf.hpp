// Exact, series and asymptotic evaluation of the periodic autocovariance and
// autocorrelation functions of a PtvARFIMA model.
//
// Lag semantics: gamma_i(h) = Cov(X_t, X_{t+h}) where t is any time in
// season i and h >= 0. The second observation lives in season i+h, whose
// memory parameter enters the closed form. Negative lags are reached by
// covariance symmetry through acvf_signed.
//
// Noise convention: the closed forms carry the single factor sigma_i^2 of
// the anchor season. For models with season-dependent noise variances the
// moving-average sum actually crosses noise seasons; that alternative
// weighting is available behind NoiseConvention::per_term in the series
// route. The two coincide whenever all sigma_i^2 are equal.
#pragma once

#include "ptvarfima/model.hpp"

#include <vector>

namespace ptvarfima {

enum class AcvfMethod { exact, series, asymptotic, hypergeometric };

enum class NoiseConvention { printed, per_term };

const char* to_string(AcvfMethod method);

// Closed-form gamma_i(h) for h >= 0.
double acvf_exact(const PtvArfimaModel& model, SeasonIndex i, long long h);

// Period-2 odd/even split of the same closed form; requires period() == 2.
// Kept as a separate evaluation path for consistency testing.
double acvf_exact_p2(const PtvArfimaModel& model, SeasonIndex i, long long h);

// Hypergeometric route: prefactor times 2F1 at unit argument. Agrees with
// acvf_exact to rounding because Gauss summation is an identity.
double acvf_hypergeometric(const PtvArfimaModel& model, SeasonIndex i,
                           long long h);

// Brute-force truncated moving-average product sum
//   sigma_i^2 * sum_{j=0}^{n_terms} psi_j^{(d_i)} psi_{j+h}^{(d_{i+h})}.
// This is the independent oracle for the closed forms; truncation error
// decays like n_terms^{d_i + d_{i+h} - 1}.
double acvf_series(const PtvArfimaModel& model, SeasonIndex i, long long h,
                   long long n_terms,
                   NoiseConvention convention = NoiseConvention::printed);

// Closed-form periodic autocorrelation rho_i(h) = gamma_i(h) / gamma_i(0).
double acf_exact(const PtvArfimaModel& model, SeasonIndex i, long long h);

// Hyperbolic decay law gamma_i(h) ~ C * h^{-alpha} over one residue class.
struct DecayLaw {
  int season = 1;     // anchor season i
  int residue = 0;    // k = h mod p served by this law
  double C = 0.0;     // sigma_i^2 Gamma(1-d_i-d_{i+k}) / (Gamma(d_{i+k}) Gamma(1-d_{i+k}))
  double alpha = 1.0; // 1 - d_i - d_{i+k}, in (0, 1] for admissible d
};

DecayLaw decay_law(const PtvArfimaModel& model, SeasonIndex i, int residue);

// C * h^{-alpha} with (C, alpha) from the residue class of h; h >= 1.
double acvf_asymptotic(const PtvArfimaModel& model, SeasonIndex i,
                       long long h);

// gamma anchored at season i for any integer lag; h < 0 relabels through
// Cov(X_t, X_{t+h}) = Cov(X_{t+h}, X_{(t+h) + (-h)}).
double acvf_signed(const PtvArfimaModel& model, SeasonIndex i, long long h);

// Batched evaluation over seasons x lags. For the asymptotic method the
// table starts at lag 1 (the law is undefined at h = 0); every other method
// starts at lag 0. rho rows hold gamma(h)/gamma(0) of the same method,
// except asymptotic where the exact lag-0 variance normalizes.
struct AcvfTable {
  PtvArfimaModel model;
  int max_lag = 0;
  int first_lag = 0;
  AcvfMethod method = AcvfMethod::exact;
  long long n_terms = 0;  // series route only
  std::vector<std::vector<double>> gamma;  // [season-1][lag - first_lag]
  std::vector<std::vector<double>> rho;

  double gamma_at(int season, int lag) const;
  double rho_at(int season, int lag) const;
};

AcvfTable acvf_table(const PtvArfimaModel& model, int max_lag,
                     AcvfMethod method = AcvfMethod::exact,
                     long long n_terms = 1000000);

}  // namespace ptvarfima
