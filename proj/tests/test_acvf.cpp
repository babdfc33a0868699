#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "ptvarfima/acvf.hpp"
#include "ptvarfima/figures.hpp"
#include "ptvarfima/model.hpp"
#include "ptvarfima/special_functions.hpp"

using namespace ptvarfima;

namespace {

double rel(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

double ref_g(double x) { return static_cast<double>(oracles::ref_gamma(x)); }

}  // namespace

TEST_CASE("variance collapses to Gamma(1-2d)/Gamma(1-d)^2") {
  for (double d : {0.05, 0.2, 0.3, 0.45}) {
    const auto m = new_model(3, {d, d, d}, {1.0, 1.0, 1.0});
    const double want = ref_g(1.0 - 2.0 * d) / std::pow(ref_g(1.0 - d), 2);
    for (int s = 1; s <= 3; ++s)
      CHECK(rel(acvf_exact(m, SeasonIndex(s), 0), want) < 1e-13);
  }
}

TEST_CASE("closed form matches the accelerated series oracle") {
  const auto m = figure1_model();
  for (int s = 1; s <= 2; ++s)
    for (long long h : {0LL, 1LL, 2LL, 3LL, 4LL, 5LL, 10LL, 100LL}) {
      const double oracle = oracles::acvf_series_accelerated(
          m.d(SeasonIndex(s)), d_at_offset(m, SeasonIndex(s), h), h, 1.0,
          250000);
      CHECK(rel(acvf_exact(m, SeasonIndex(s), h), oracle) < 1e-8);
    }
  // frozen from the recurrence-product reference composition
  CHECK(acvf_exact(m, SeasonIndex(1), 0) ==
        doctest::Approx(1.3164560621300047).epsilon(1e-12));
  CHECK(acvf_exact(m, SeasonIndex(1), 1) ==
        doctest::Approx(0.88433538126976058).epsilon(1e-12));
  CHECK(acvf_exact(m, SeasonIndex(2), 0) ==
        doctest::Approx(2.0700983252962855).epsilon(1e-12));
  CHECK(acvf_exact(m, SeasonIndex(2), 1) ==
        doctest::Approx(0.7737934586110405).epsilon(1e-12));
}

TEST_CASE("truncated series route lands within its tail bound") {
  const auto m = figure1_model();
  // d=(0.3,0.4): mixed-season tail ~ n^{-0.3}, a few percent at n = 1e6
  CHECK(rel(acvf_series(m, SeasonIndex(1), 4, 1000000),
            acvf_exact(m, SeasonIndex(1), 4)) < 0.05);
  const auto fast = new_model(2, {0.05, 0.10}, {1.0, 1.0});
  CHECK(rel(acvf_series(fast, SeasonIndex(2), 3, 1000000),
            acvf_exact(fast, SeasonIndex(2), 3)) < 1e-5);

  // the same-season d=0.4 residue class decays like n^{-0.2}; the dropped
  // mass is a predictable integral, so series + tail estimate recovers the
  // closed form far inside the raw truncation gap
  const long long n = 1000000;
  const double raw = acvf_series(m, SeasonIndex(2), 20, n);
  const double exact = acvf_exact(m, SeasonIndex(2), 20);
  CHECK(rel(raw, exact) > 0.05);  // 5% is genuinely out of reach here
  const double g04 = static_cast<double>(oracles::ref_gamma(0.4L));
  const double tail =
      std::pow(static_cast<double>(n), -0.2) / (0.2 * g04 * g04);
  CHECK(rel(raw + tail, exact) < 0.005);
}

TEST_CASE("hypergeometric route equals the closed form") {
  for (const auto& m : {figure1_model(), figure2_model()})
    for (int s = 1; s <= 2; ++s)
      for (long long h = 0; h <= 50; ++h)
        CHECK(rel(acvf_hypergeometric(m, SeasonIndex(s), h),
                  acvf_exact(m, SeasonIndex(s), h)) < 1e-12);

  // spell one cell out against the raw 2F1 series: d=(0.09,0.49), i=2, h=7
  const auto m2 = figure2_model();
  const double d2 = 0.49, d9 = 0.09;  // season of 2+7 is 1
  const double prefactor =
      rising_factorial(d9, 7) / static_cast<double>(oracles::ref_gamma(8.0L));
  const double f = oracles::series_2f1(d2, d9 + 7.0, 8.0, 250000);
  CHECK(rel(acvf_hypergeometric(m2, SeasonIndex(2), 7), prefactor * f) < 1e-8);
}

TEST_CASE("stationary reduction at p = 1") {
  const double d = 0.3;
  const auto m = new_model(1, {d}, {1.0});
  CHECK(rel(acf_exact(m, SeasonIndex(1), 1), d / (1.0 - d)) < 1e-13);

  for (long long h = 0; h <= 50; ++h) {
    const double want = ref_g(1.0 - 2.0 * d) * ref_g(h + d) /
                        (ref_g(d) * ref_g(1.0 - d) * ref_g(h + 1.0 - d));
    CHECK(rel(acvf_exact(m, SeasonIndex(1), h), want) < 1e-12);
  }

  // series route converges to the lag-1 value
  const double want1 =
      d / (1.0 - d) * ref_g(1.0 - 2.0 * d) / std::pow(ref_g(1.0 - d), 2);
  CHECK(rel(acvf_series(m, SeasonIndex(1), 1, 1000000), want1) < 0.05);
}

TEST_CASE("autocorrelation normalizes and matches the covariance ratio") {
  for (const auto& m : {figure1_model(), figure2_model()}) {
    for (int s = 1; s <= 2; ++s) {
      CHECK(acf_exact(m, SeasonIndex(s), 0) == doctest::Approx(1.0).epsilon(1e-14));
      for (long long h = 0; h <= 100; ++h)
        CHECK(rel(acf_exact(m, SeasonIndex(s), h),
                  acvf_exact(m, SeasonIndex(s), h) /
                      acvf_exact(m, SeasonIndex(s), 0)) < 1e-12);
    }
  }

  // period-2 odd-lag branch written out with reference Gammas
  const auto m = figure1_model();
  const double d1 = 0.3, d2 = 0.4;
  for (long long h : {1LL, 3LL, 7LL}) {
    const double want = std::pow(ref_g(1.0 - d1), 2) * ref_g(1.0 - d1 - d2) *
                        ref_g(d2 + h) /
                        (ref_g(1.0 - 2.0 * d1) * ref_g(d2) * ref_g(1.0 - d2) *
                         ref_g(1.0 + h - d1));
    CHECK(rel(acf_exact(m, SeasonIndex(1), h), want) < 1e-12);
  }
}

TEST_CASE("period-2 split form equals the general form") {
  for (const auto& m : {figure1_model(), figure2_model()})
    for (int s = 1; s <= 2; ++s)
      for (long long h = 0; h <= 50; ++h)
        CHECK(rel(acvf_exact_p2(m, SeasonIndex(s), h),
                  acvf_exact(m, SeasonIndex(s), h)) < 1e-12);
  CHECK_THROWS_AS(acvf_exact_p2(new_model(3, {0.1, 0.2, 0.3}, {1, 1, 1}),
                                SeasonIndex(1), 2),
                  std::invalid_argument);
}

TEST_CASE("decay law constants and exponents") {
  const auto m = figure1_model();
  const auto law01 = decay_law(m, SeasonIndex(1), 1);
  CHECK(law01.alpha == doctest::Approx(0.3).epsilon(1e-14));
  const auto law00 = decay_law(m, SeasonIndex(1), 0);
  CHECK(law00.alpha == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(rel(law00.C, ref_g(0.4) / (ref_g(0.3) * ref_g(0.7))) < 1e-13);

  const auto p1 = new_model(1, {0.3}, {1.0});
  CHECK(decay_law(p1, SeasonIndex(1), 0).alpha ==
        doctest::Approx(0.4).epsilon(1e-14));

  for (const auto& model : {figure1_model(), figure2_model(),
                            new_model(3, {0.05, 0.25, 0.45}, {1.0, 2.0, 3.0})})
    for (int s = 1; s <= model.period(); ++s)
      for (int k = 0; k < model.period(); ++k) {
        const auto law = decay_law(model, SeasonIndex(s), k);
        CHECK(law.C > 0.0);
        CHECK(law.alpha > 0.0);
        CHECK(law.alpha <= 1.0);
      }

  CHECK_THROWS_AS(decay_law(m, SeasonIndex(1), 2), std::invalid_argument);
}

TEST_CASE("asymptotic law closes on the exact form") {
  const auto m = figure1_model();
  for (int s = 1; s <= 2; ++s)
    for (long long h : {10000LL, 10001LL})
      CHECK(rel(acvf_asymptotic(m, SeasonIndex(s), h),
                acvf_exact(m, SeasonIndex(s), h)) < 0.01);
  CHECK_THROWS_AS(acvf_asymptotic(m, SeasonIndex(1), 0), std::invalid_argument);
}

TEST_CASE("signed lags relabel through covariance symmetry") {
  const auto m = figure1_model();
  CHECK(acvf_signed(m, SeasonIndex(1), -1) ==
        acvf_exact(m, SeasonIndex(2), 1));
  CHECK(acvf_signed(m, SeasonIndex(1), -2) ==
        acvf_exact(m, SeasonIndex(1), 2));
  CHECK(acvf_signed(m, SeasonIndex(2), 5) == acvf_exact(m, SeasonIndex(2), 5));

  const auto p1 = new_model(1, {0.3}, {1.0});
  for (long long h = -6; h <= 6; ++h)
    CHECK(acvf_signed(p1, SeasonIndex(1), h) ==
          acvf_exact(p1, SeasonIndex(1), std::llabs(h)));
}

TEST_CASE("noise conventions coincide exactly when variances are equal") {
  const auto m = figure1_model();
  CHECK(acvf_series(m, SeasonIndex(1), 3, 20000, NoiseConvention::printed) ==
        doctest::Approx(acvf_series(m, SeasonIndex(1), 3, 20000,
                                    NoiseConvention::per_term))
            .epsilon(1e-14));

  const auto hetero = new_model(2, {0.3, 0.4}, {1.0, 4.0});
  const double printed =
      acvf_series(hetero, SeasonIndex(1), 1, 20000, NoiseConvention::printed);
  const double per_term =
      acvf_series(hetero, SeasonIndex(1), 1, 20000, NoiseConvention::per_term);
  CHECK(std::fabs(printed - per_term) > 0.05);
}

TEST_CASE("degenerate white-noise seasons stay finite") {
  const auto m = new_model(2, {0.0, 0.3}, {2.0, 1.0});
  // lag into the white-noise season: nothing survives
  CHECK(acvf_exact(m, SeasonIndex(2), 1) == 0.0);
  CHECK(acf_exact(m, SeasonIndex(2), 1) == 0.0);
  // anchor on the white-noise season, target carries d = 0.3
  CHECK(rel(acvf_exact(m, SeasonIndex(1), 1), 2.0 * 0.3) < 1e-13);
  CHECK(acvf_exact(m, SeasonIndex(1), 0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(rel(acvf_series(m, SeasonIndex(1), 1, 100),
            acvf_exact(m, SeasonIndex(1), 1)) < 1e-13);

  const auto wn = new_model(2, {0.0, 0.0}, {1.0, 5.0});
  CHECK(acvf_exact(wn, SeasonIndex(2), 0) == doctest::Approx(5.0));
  CHECK(acvf_exact(wn, SeasonIndex(2), 3) == 0.0);
  CHECK(acf_exact(wn, SeasonIndex(2), 0) == doctest::Approx(1.0));
  CHECK(acvf_series(wn, SeasonIndex(2), 0, 50) == doctest::Approx(5.0));
}

TEST_CASE("table evaluation over seasons and lags") {
  const auto m = figure1_model();
  const auto table = acvf_table(m, 20, AcvfMethod::exact);
  CHECK(table.first_lag == 0);
  CHECK(table.gamma.size() == 2);
  CHECK(table.gamma[0].size() == 21);
  for (int s = 1; s <= 2; ++s) {
    CHECK(table.gamma_at(s, 0) > 0.0);
    CHECK(table.rho_at(s, 0) == doctest::Approx(1.0));
    for (int h = 0; h <= 20; ++h) {
      CHECK(std::isfinite(table.gamma_at(s, h)));
      CHECK(table.gamma_at(s, h) == acvf_exact(m, SeasonIndex(s), h));
    }
  }

  const auto zero = acvf_table(m, 0, AcvfMethod::exact);
  CHECK(zero.gamma_at(1, 0) == acvf_exact(m, SeasonIndex(1), 0));
  CHECK(zero.gamma_at(2, 0) == acvf_exact(m, SeasonIndex(2), 0));

  const auto asym = acvf_table(m, 10, AcvfMethod::asymptotic);
  CHECK(asym.first_lag == 1);
  CHECK(asym.gamma[0].size() == 10);
  CHECK(asym.gamma_at(1, 1) == acvf_asymptotic(m, SeasonIndex(1), 1));
  CHECK_THROWS_AS(acvf_table(m, 0, AcvfMethod::asymptotic),
                  std::invalid_argument);

  const auto series = acvf_table(m, 3, AcvfMethod::series, 5000);
  CHECK(series.n_terms == 5000);
  CHECK(series.gamma_at(1, 2) == acvf_series(m, SeasonIndex(1), 2, 5000));
}

TEST_CASE("figure curves: ordering, shape and gap claims") {
  const auto fig1 = figure_curves(figure1_model(), 100);
  const auto fig2 = figure_curves(figure2_model(), 100);

  // look-back anchoring: curve_i(h) = Cov(X_{t-h}, X_t), t in season i
  CHECK(fig1.gamma[0][1] == acvf_exact(figure1_model(), SeasonIndex(2), 1));
  CHECK(fig1.gamma[1][1] == acvf_exact(figure1_model(), SeasonIndex(1), 1));
  CHECK(fig1.gamma[0][2] == acvf_exact(figure1_model(), SeasonIndex(1), 2));

  for (int h = 1; h <= 100; ++h) {
    CHECK(fig1.gamma[0][h] < fig1.gamma[1][h]);
    CHECK(fig2.gamma[0][h] < fig2.gamma[1][h]);
  }

  const auto c1 = check_figure_claims(fig1);
  const auto c2 = check_figure_claims(fig2);
  CHECK(c1.all_positive);
  CHECK(c1.ordered_by_d);
  CHECK(c1.monotone_per_residue);
  CHECK(c2.all_positive);
  CHECK(c2.ordered_by_d);
  CHECK(c2.monotone_per_residue);
  CHECK(c2.max_gap > c1.max_gap);

  CHECK(fig1.rho[0][0] == doctest::Approx(1.0));
  CHECK(fig1.rho[1][0] == doctest::Approx(1.0));
}
