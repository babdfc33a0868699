#include "ptvarfima/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ptvarfima {

namespace {

int season0(long long t, int p) {
  long long r = (t - 1) % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

double sample_mean(std::span<const double> v) {
  long double acc = 0.0L;
  for (double x : v) acc += x;
  return v.empty() ? 0.0 : static_cast<double>(acc / v.size());
}

}  // namespace

double PeriodicSampleStats::gamma_at(int season, int lag) const {
  return gamma_hat[static_cast<std::size_t>(season - 1)]
                  [static_cast<std::size_t>(lag)];
}

double PeriodicSampleStats::rho_at(int season, int lag) const {
  return rho_hat[static_cast<std::size_t>(season - 1)]
                [static_cast<std::size_t>(lag)];
}

PeriodicSampleStats sample_periodic_acvf(std::span<const double> data,
                                         int period, int max_lag,
                                         Centering centering) {
  if (period < 1)
    throw std::invalid_argument("sample_periodic_acvf: period must be >= 1");
  if (max_lag < 0)
    throw std::invalid_argument("sample_periodic_acvf: max_lag must be >= 0");
  const long long n = static_cast<long long>(data.size());
  if (n < static_cast<long long>(period) * (max_lag + 2))
    throw std::invalid_argument(
        "sample_periodic_acvf: need at least period*(max_lag+2) observations, "
        "got " + std::to_string(n));

  PeriodicSampleStats stats;
  stats.period = period;
  stats.max_lag = max_lag;
  stats.season_means.assign(static_cast<std::size_t>(period), 0.0);
  stats.season_counts.assign(static_cast<std::size_t>(period), 0);

  for (long long t = 1; t <= n; ++t) {
    const int s = season0(t, period);
    stats.season_means[static_cast<std::size_t>(s)] +=
        data[static_cast<std::size_t>(t - 1)];
    ++stats.season_counts[static_cast<std::size_t>(s)];
  }
  for (int s = 0; s < period; ++s)
    if (stats.season_counts[static_cast<std::size_t>(s)] > 0)
      stats.season_means[static_cast<std::size_t>(s)] /=
          static_cast<double>(stats.season_counts[static_cast<std::size_t>(s)]);

  std::vector<double> center(static_cast<std::size_t>(period), 0.0);
  if (centering == Centering::per_season_mean) center = stats.season_means;

  stats.gamma_hat.assign(
      static_cast<std::size_t>(period),
      std::vector<double>(static_cast<std::size_t>(max_lag) + 1, 0.0));
  stats.pair_counts.assign(
      static_cast<std::size_t>(period),
      std::vector<long long>(static_cast<std::size_t>(max_lag) + 1, 0));

  for (int i = 1; i <= period; ++i) {
    const double ci = center[static_cast<std::size_t>(i - 1)];
    for (int h = 0; h <= max_lag; ++h) {
      const double ch = center[static_cast<std::size_t>(
          season0(static_cast<long long>(i) + h, period))];
      long double acc = 0.0L;
      long long pairs = 0;
      for (long long t = i; t + h <= n; t += period) {
        acc += (static_cast<long double>(data[static_cast<std::size_t>(t - 1)]) -
                ci) *
               (data[static_cast<std::size_t>(t - 1 + h)] - ch);
        ++pairs;
      }
      stats.gamma_hat[static_cast<std::size_t>(i - 1)]
                     [static_cast<std::size_t>(h)] =
          pairs > 0 ? static_cast<double>(acc / pairs) : 0.0;
      stats.pair_counts[static_cast<std::size_t>(i - 1)]
                       [static_cast<std::size_t>(h)] = pairs;
    }
  }
  return stats;
}

PeriodicSampleStats sample_periodic_acf(PeriodicSampleStats stats) {
  stats.rho_hat.assign(
      static_cast<std::size_t>(stats.period),
      std::vector<double>(static_cast<std::size_t>(stats.max_lag) + 1, 0.0));
  for (int i = 1; i <= stats.period; ++i) {
    const double var0 = stats.gamma_at(i, 0);
    if (!(var0 > 0.0))
      throw std::domain_error(
          "sample_periodic_acf: zero-variance season " + std::to_string(i));
    for (int h = 0; h <= stats.max_lag; ++h)
      stats.rho_hat[static_cast<std::size_t>(i - 1)]
                   [static_cast<std::size_t>(h)] =
          stats.gamma_at(i, h) / var0;
  }
  return stats;
}

namespace {

// Pair grid shared by both diagnostics: phases 1..p crossed with growing
// in-pair offsets.
std::vector<std::pair<long long, long long>> pair_grid(int p, int n_pairs) {
  std::vector<std::pair<long long, long long>> grid;
  grid.reserve(static_cast<std::size_t>(n_pairs));
  for (long long delta = 0; static_cast<int>(grid.size()) < n_pairs; ++delta)
    for (int i = 1; i <= p && static_cast<int>(grid.size()) < n_pairs; ++i)
      grid.emplace_back(i, i + delta);
  return grid;
}

double safe_z(double mean, double se) {
  if (se > 0.0) return mean / se;
  return mean == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

PeriodicityReport periodicity_check(std::span<const double> data,
                                    int candidate_period, int n_pairs,
                                    double threshold) {
  if (candidate_period < 1)
    throw std::invalid_argument("periodicity_check: period must be >= 1");
  if (n_pairs < 1)
    throw std::invalid_argument("periodicity_check: n_pairs must be >= 1");
  const long long n = static_cast<long long>(data.size());
  const int p = candidate_period;

  const double mean = sample_mean(data);
  auto xc = [&](long long t) {
    return data[static_cast<std::size_t>(t - 1)] - mean;
  };

  PeriodicityReport report;
  report.candidate_period = p;
  report.n_pairs = n_pairs;
  report.threshold = threshold;

  const long long stride = 2LL * p;
  for (const auto& [t0, t1] : pair_grid(p, n_pairs)) {
    // base products X_{t0+2pm} X_{t1+2pm}, shifted products at +p
    const long long last_needed = t1 + p;
    const long long cycles =
        n >= last_needed ? (n - last_needed) / stride + 1 : 0;
    if (cycles < 2)
      throw std::invalid_argument(
          "periodicity_check: need at least two full cycles of pair (" +
          std::to_string(t0) + ", " + std::to_string(t1) + ")");

    std::vector<double> diff(static_cast<std::size_t>(cycles));
    long double base_acc = 0.0L, shift_acc = 0.0L;
    for (long long m = 0; m < cycles; ++m) {
      const long long u = t0 + stride * m;
      const long long v = t1 + stride * m;
      const double a = xc(u) * xc(v);
      const double b = xc(u + p) * xc(v + p);
      base_acc += a;
      shift_acc += b;
      diff[static_cast<std::size_t>(m)] = a - b;
    }

    // batch means: sqrt(cycles) blocks absorb the long-memory dependence
    const long long n_blocks =
        std::max<long long>(2, static_cast<long long>(std::sqrt(
                                   static_cast<double>(cycles))));
    const long long block_len = cycles / n_blocks;
    const long long used = n_blocks * block_len;
    std::vector<double> block_means(static_cast<std::size_t>(n_blocks));
    for (long long b = 0; b < n_blocks; ++b) {
      long double acc = 0.0L;
      for (long long k = 0; k < block_len; ++k)
        acc += diff[static_cast<std::size_t>(b * block_len + k)];
      block_means[static_cast<std::size_t>(b)] =
          static_cast<double>(acc / block_len);
    }
    const double grand =
        sample_mean(std::span<const double>(block_means));
    long double var_acc = 0.0L;
    for (double bm : block_means) var_acc += (bm - grand) * (bm - grand);
    const double var_of_mean =
        static_cast<double>(var_acc) /
        (static_cast<double>(n_blocks - 1) * static_cast<double>(n_blocks));
    const double se = std::sqrt(var_of_mean);

    PairDiscrepancy pd;
    pd.t = t0;
    pd.t_prime = t1;
    pd.cov_base = static_cast<double>(base_acc / cycles);
    pd.cov_shifted = static_cast<double>(shift_acc / cycles);
    pd.z = safe_z(grand, se);
    pd.samples = used;
    report.pairs.push_back(pd);
    report.max_abs_z = std::max(report.max_abs_z, std::fabs(pd.z));
  }
  report.consistent = report.max_abs_z <= threshold;
  return report;
}

PeriodicityReport periodicity_check_ensemble(
    const std::vector<std::span<const double>>& paths, int candidate_period,
    int n_pairs, double threshold) {
  if (candidate_period < 1)
    throw std::invalid_argument("periodicity_check: period must be >= 1");
  if (paths.size() < 2)
    throw std::invalid_argument(
        "periodicity_check_ensemble: need at least two replicates");
  const int p = candidate_period;
  const long long R = static_cast<long long>(paths.size());

  PeriodicityReport report;
  report.candidate_period = p;
  report.n_pairs = n_pairs;
  report.threshold = threshold;

  for (const auto& [t0, t1] : pair_grid(p, n_pairs)) {
    const long long last_needed = t1 + p;
    for (const auto& path : paths)
      if (static_cast<long long>(path.size()) < last_needed)
        throw std::invalid_argument(
            "periodicity_check_ensemble: replicate shorter than tested pair");

    long double base_acc = 0.0L, shift_acc = 0.0L, dacc = 0.0L, d2acc = 0.0L;
    for (const auto& path : paths) {
      const double a = path[static_cast<std::size_t>(t0 - 1)] *
                       path[static_cast<std::size_t>(t1 - 1)];
      const double b = path[static_cast<std::size_t>(t0 + p - 1)] *
                       path[static_cast<std::size_t>(t1 + p - 1)];
      base_acc += a;
      shift_acc += b;
      dacc += a - b;
      d2acc += static_cast<long double>(a - b) * (a - b);
    }
    const double dmean = static_cast<double>(dacc / R);
    const double dvar =
        static_cast<double>((d2acc - dacc * dacc / R) / (R - 1));
    const double se = std::sqrt(std::max(0.0, dvar) / static_cast<double>(R));

    PairDiscrepancy pd;
    pd.t = t0;
    pd.t_prime = t1;
    pd.cov_base = static_cast<double>(base_acc / R);
    pd.cov_shifted = static_cast<double>(shift_acc / R);
    pd.z = safe_z(dmean, se);
    pd.samples = R;
    report.pairs.push_back(pd);
    report.max_abs_z = std::max(report.max_abs_z, std::fabs(pd.z));
  }
  report.consistent = report.max_abs_z <= threshold;
  return report;
}

}  // namespace ptvarfima
