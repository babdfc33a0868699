// Periodic sample moments from observed or simulated data, and the
// shift-invariance (cyclostationarity) diagnostic: a process with period p
// must satisfy E(X_{t+p}) = E(X_t) and Cov(X_{t+p}, X_{t'+p}) = Cov(X_t, X_{t'}).
#pragma once

#include "ptvarfima/model.hpp"

#include <span>
#include <vector>

namespace ptvarfima {

enum class Centering { per_season_mean, zero };

// Per-season sample means and per-(season, lag) sample ACVF/ACF. The ACVF
// divisor is the pair count N_i(h), which keeps the zero-centered estimator
// unbiased for the truncated-process covariance.
struct PeriodicSampleStats {
  int period = 1;
  int max_lag = 0;
  std::vector<double> season_means;                 // mu_hat_i
  std::vector<long long> season_counts;             // N_i
  std::vector<std::vector<double>> gamma_hat;       // [season-1][lag]
  std::vector<std::vector<double>> rho_hat;         // filled by sample_periodic_acf
  std::vector<std::vector<long long>> pair_counts;  // N_i(h)

  double gamma_at(int season, int lag) const;
  double rho_at(int season, int lag) const;
};

// gamma_hat_i(h) = (1/N_i(h)) sum_m (X_{i+pm} - c_i)(X_{i+pm+h} - c_{s(i+h)})
// over every m with both indices observed; c is the per-season mean or zero.
// data[k] is the observation at time t = k + 1.
PeriodicSampleStats sample_periodic_acvf(
    std::span<const double> data, int period, int max_lag,
    Centering centering = Centering::per_season_mean);

// rho_hat_i(h) = gamma_hat_i(h) / gamma_hat_i(0); throws on a zero-variance
// season.
PeriodicSampleStats sample_periodic_acf(PeriodicSampleStats stats);

// One tested covariance pair of the periodicity diagnostic: the covariance
// anchored at (t, t') against the same pair shifted by the candidate period.
struct PairDiscrepancy {
  long long t = 0;
  long long t_prime = 0;
  double cov_base = 0.0;
  double cov_shifted = 0.0;
  double z = 0.0;        // standardized discrepancy
  long long samples = 0; // replication count behind the estimates
};

struct PeriodicityReport {
  int candidate_period = 1;
  int n_pairs = 0;
  double threshold = 3.0;
  std::vector<PairDiscrepancy> pairs;
  double max_abs_z = 0.0;
  bool consistent = true;
};

// Single-series diagnostic. Replication uses a 2p stride (valid under the
// hypothesis: p-periodic implies 2p-periodic) and block-based (batch-means)
// variance estimates, since long memory breaks the iid CLT scaling.
PeriodicityReport periodicity_check(std::span<const double> data,
                                    int candidate_period, int n_pairs,
                                    double threshold = 3.0);

// Ensemble diagnostic: replicates give independent samples of each product,
// so the discrepancy variance comes from the replicate scatter.
PeriodicityReport periodicity_check_ensemble(
    const std::vector<std::span<const double>>& paths, int candidate_period,
    int n_pairs, double threshold = 3.0);

}  // namespace ptvarfima
