#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "ptvarfima/acvf.hpp"
#include "ptvarfima/estimate.hpp"
#include "ptvarfima/model.hpp"
#include "ptvarfima/simulate.hpp"

using namespace ptvarfima;

namespace {

std::vector<double> gaussian_series(std::size_t n, std::uint64_t seed,
                                    double sd = 1.0) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> N01(0.0, 1.0);
  std::vector<double> out(n);
  for (auto& v : out) v = sd * N01(eng);
  return out;
}

}  // namespace

TEST_CASE("constant series has zero covariance under mean centering") {
  const std::vector<double> data(64, 3.25);
  const auto stats = sample_periodic_acvf(data, 2, 4);
  for (int s = 1; s <= 2; ++s) {
    CHECK(stats.season_means[s - 1] == doctest::Approx(3.25));
    for (int h = 0; h <= 4; ++h) CHECK(stats.gamma_at(s, h) == 0.0);
  }
  CHECK_THROWS_AS(sample_periodic_acf(stats), std::domain_error);
}

TEST_CASE("input validation") {
  const std::vector<double> tiny(5, 1.0);
  CHECK_THROWS_AS(sample_periodic_acvf(tiny, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(sample_periodic_acvf(tiny, 0, 1), std::invalid_argument);
}

TEST_CASE("pair counts and basic bookkeeping") {
  const auto data = gaussian_series(101, 9);
  const auto stats = sample_periodic_acvf(data, 2, 3, Centering::zero);
  CHECK(stats.season_counts[0] == 51);  // odd times
  CHECK(stats.season_counts[1] == 50);
  CHECK(stats.pair_counts[0][0] == 51);
  CHECK(stats.pair_counts[0][1] == 50);  // t=101 has no partner at h=1
  CHECK(stats.pair_counts[1][1] == 50);
  for (int s = 1; s <= 2; ++s) CHECK(stats.gamma_at(s, 0) > 0.0);
}

TEST_CASE("autocorrelation normalizes and is scale invariant") {
  const auto data = gaussian_series(400, 17);
  auto stats = sample_periodic_acf(sample_periodic_acvf(data, 2, 5));

  std::vector<double> scaled(data);
  for (auto& v : scaled) v *= 4.0;  // power of two: exact arithmetic
  auto stats4 = sample_periodic_acf(sample_periodic_acvf(scaled, 2, 5));

  for (int s = 1; s <= 2; ++s) {
    CHECK(stats.rho_at(s, 0) == 1.0);
    for (int h = 0; h <= 5; ++h)
      CHECK(stats.rho_at(s, h) == doctest::Approx(stats4.rho_at(s, h)).epsilon(1e-15));
  }
}

TEST_CASE("period one reduces to the ordinary sample ACVF") {
  const auto data = gaussian_series(257, 31);
  const auto stats = sample_periodic_acvf(data, 1, 6);

  double mean = 0;
  for (double v : data) mean += v;
  mean /= data.size();
  for (int h = 0; h <= 6; ++h) {
    double acc = 0;
    long long cnt = 0;
    for (std::size_t t = 0; t + h < data.size(); ++t) {
      acc += (data[t] - mean) * (data[t + h] - mean);
      ++cnt;
    }
    CHECK(stats.gamma_at(1, h) == doctest::Approx(acc / cnt).epsilon(1e-12));
  }
}

TEST_CASE("rotating the start by one period drops exactly the head pairs") {
  const auto data = gaussian_series(211, 77);
  const int p = 2, H = 4;
  const auto full = sample_periodic_acvf(data, p, H, Centering::zero);
  const std::vector<double> shifted(data.begin() + p, data.end());
  const auto sub = sample_periodic_acvf(shifted, p, H, Centering::zero);

  for (int i = 1; i <= p; ++i)
    for (int h = 0; h <= H; ++h) {
      CHECK(full.pair_counts[i - 1][h] == sub.pair_counts[i - 1][h] + 1);
      const double full_sum =
          full.gamma_at(i, h) * full.pair_counts[i - 1][h];
      const double sub_sum = sub.gamma_at(i, h) * sub.pair_counts[i - 1][h];
      // the only pair not shared is the one anchored at t = i
      const double dropped = data[i - 1] * data[i - 1 + h];
      CHECK(full_sum - sub_sum == doctest::Approx(dropped).epsilon(1e-12));
    }
}

TEST_CASE("white noise shows no spurious periodic correlation") {
  const auto data = gaussian_series(40000, 5150, 2.0);
  const auto stats = sample_periodic_acvf(data, 2, 5, Centering::zero);
  for (int s = 1; s <= 2; ++s) {
    CHECK(stats.gamma_at(s, 0) == doctest::Approx(4.0).epsilon(0.05));
    for (int h = 1; h <= 5; ++h) {
      const double se = 4.0 / std::sqrt(static_cast<double>(
                                  stats.pair_counts[s - 1][h]));
      CHECK(std::fabs(stats.gamma_at(s, h)) < 3.5 * se);
    }
  }
}

TEST_CASE("ensemble mean tracks the truncation-adjusted theory") {
  const auto m = figure1_model();
  const int R = 200, n = 512, M = 1200, H = 3;
  const auto ens = simulate_ensemble(m, n, M, M, R, 8181);

  for (int s = 1; s <= 2; ++s)
    for (int h = 0; h <= H; ++h) {
      std::vector<double> gammas, rhos;
      gammas.reserve(R);
      rhos.reserve(R);
      for (const auto& rep : ens.replicates) {
        const auto stats = sample_periodic_acf(
            sample_periodic_acvf(rep.values, 2, H, Centering::zero));
        gammas.push_back(stats.gamma_at(s, h));
        rhos.push_back(stats.rho_at(s, h));
      }
      auto mean_sd = [](const std::vector<double>& v) {
        double mean = 0;
        for (double u : v) mean += u;
        mean /= v.size();
        double var = 0;
        for (double u : v) var += (u - mean) * (u - mean);
        return std::pair<double, double>(mean,
                                         std::sqrt(var / (v.size() - 1)));
      };
      const auto [gmean, gsd] = mean_sd(gammas);
      const double truncated = acvf_series(m, SeasonIndex(s), h, M - h);
      const double exact = acvf_exact(m, SeasonIndex(s), h);
      CHECK(std::fabs(gmean - truncated) <= 3.0 * gsd / std::sqrt(R * 1.0));
      CHECK(std::fabs(gmean - exact) <= 3.0 * gsd);

      // the ratio estimator tracks the closed-form autocorrelation as well
      const auto [rmean, rsd] = mean_sd(rhos);
      const double rho_exact = acf_exact(m, SeasonIndex(s), h);
      if (h == 0)
        CHECK(rmean == 1.0);
      else
        CHECK(std::fabs(rmean - rho_exact) <= 3.0 * rsd);
    }
}

TEST_CASE("estimator mean-squared error shrinks as the path grows") {
  const auto m = figure1_model();
  const int R = 160, M = 800;
  auto mse = [&](int n) {
    const auto ens = simulate_ensemble(m, n, M, M, R, 131313);
    double acc = 0;
    for (const auto& rep : ens.replicates) {
      const auto stats =
          sample_periodic_acvf(rep.values, 2, 1, Centering::zero);
      for (int s = 1; s <= 2; ++s) {
        const double err = stats.gamma_at(s, 1) -
                           acvf_exact(m, SeasonIndex(s), 1);
        acc += err * err;
      }
    }
    return acc / (2.0 * R);
  };
  CHECK(mse(1024) < mse(256));
}

TEST_CASE("periodicity diagnostic on a single series") {
  const auto m = figure1_model();
  const auto path = simulate_path(m, 60000, 2000, 2000, 90210);

  const auto pos = periodicity_check(path.values, 2, 8);
  CHECK(pos.consistent);
  CHECK(pos.pairs.size() == 8);

  const auto neg = periodicity_check(path.values, 3, 12);
  CHECK_FALSE(neg.consistent);
  CHECK(neg.max_abs_z > 3.0);

  // white noise is trivially periodic at any candidate
  const auto iid = gaussian_series(30000, 51);
  for (int p : {2, 3, 5}) CHECK(periodicity_check(iid, p, 6).consistent);

  const std::vector<double> tiny(8, 1.0);
  CHECK_THROWS_AS(periodicity_check(tiny, 3, 6), std::invalid_argument);
}

TEST_CASE("periodicity diagnostic on an ensemble") {
  const auto m = figure1_model();
  const auto ens = simulate_ensemble(m, 24, 2000, 2000, 500, 24680);
  std::vector<std::span<const double>> paths;
  for (const auto& rep : ens.replicates) paths.emplace_back(rep.values);

  const auto pos = periodicity_check_ensemble(paths, 2, 12);
  CHECK(pos.consistent);
  const auto neg = periodicity_check_ensemble(paths, 3, 12);
  CHECK_FALSE(neg.consistent);

  CHECK_THROWS_AS(periodicity_check_ensemble({}, 2, 4), std::invalid_argument);
}
