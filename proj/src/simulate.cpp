#include "ptvarfima/simulate.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "ptvarfima/special_functions.hpp"

namespace ptvarfima {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Box-Muller pairs over mt19937_64. Self-contained so the noise stream is
// fully defined by the seed.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = open_unit();
    const double u2 = open_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  double open_unit() {
    // (0, 1): 53-bit mantissa shifted into the open interval
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

std::vector<std::vector<double>> season_psi_tables(const PtvArfimaModel& model,
                                                   int truncation) {
  std::vector<std::vector<double>> psi;
  psi.reserve(static_cast<std::size_t>(model.period()));
  for (int s = 1; s <= model.period(); ++s)
    psi.push_back(psi_coeffs(model.d(SeasonIndex(s)), truncation, s).values);
  return psi;
}

}  // namespace

double SamplePath::noise_at(long long t) const {
  const long long idx = t - first_noise_time();
  if (idx < 0 || idx >= static_cast<long long>(noise.size()))
    throw std::out_of_range("SamplePath::noise_at: time outside noise span");
  return noise[static_cast<std::size_t>(idx)];
}

double SamplePath::x_at(long long t) const {
  if (t < 1 || t > n())
    throw std::out_of_range("SamplePath::x_at: time outside 1..n");
  return values[static_cast<std::size_t>(t - 1)];
}

SamplePath simulate_path(const PtvArfimaModel& model, int n, int truncation,
                         int burn_in, std::uint64_t seed,
                         NoiseDistribution dist) {
  if (n < 1) throw std::invalid_argument("simulate_path: n must be >= 1");
  if (truncation < 1)
    throw std::invalid_argument("simulate_path: truncation must be >= 1");
  if (burn_in < 0)
    throw std::invalid_argument("simulate_path: burn_in must be >= 0");
  (void)dist;  // gaussian is the only distribution in v1

  SamplePath path{model, {}, {}, seed, truncation, burn_in};
  const int p = model.period();
  const std::size_t noise_len =
      static_cast<std::size_t>(n) + static_cast<std::size_t>(burn_in) +
      static_cast<std::size_t>(truncation);
  path.noise.resize(noise_len);

  // One period of noise standard deviations, indexed by season - 1.
  std::vector<double> sd(static_cast<std::size_t>(p));
  for (int s = 1; s <= p; ++s)
    sd[static_cast<std::size_t>(s - 1)] =
        std::sqrt(model.sigma2(SeasonIndex(s)));

  GaussianStream g(seed);
  const long long t0 = path.first_noise_time();
  for (std::size_t k = 0; k < noise_len; ++k) {
    const long long t = t0 + static_cast<long long>(k);
    path.noise[k] =
        g.next() * sd[static_cast<std::size_t>(season_of(t, p).value() - 1)];
  }

  const auto psi = season_psi_tables(model, truncation);
  path.values.resize(static_cast<std::size_t>(n));
  const int M = truncation;
  for (int t = 1; t <= n; ++t) {
    const auto& w = psi[static_cast<std::size_t>(season_of(t, p).value() - 1)];
    const double* e = path.noise.data() + (t - t0);  // eps at time t
    // fixed four-way association: deterministic and keeps the sum off the
    // add-latency chain
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    int j = 0;
    for (; j + 3 <= M; j += 4) {
      a0 += w[static_cast<std::size_t>(j)] * e[-j];
      a1 += w[static_cast<std::size_t>(j + 1)] * e[-(j + 1)];
      a2 += w[static_cast<std::size_t>(j + 2)] * e[-(j + 2)];
      a3 += w[static_cast<std::size_t>(j + 3)] * e[-(j + 3)];
    }
    for (; j <= M; ++j) a0 += w[static_cast<std::size_t>(j)] * e[-j];
    path.values[static_cast<std::size_t>(t - 1)] = (a0 + a1) + (a2 + a3);
  }
  return path;
}

ResidualSeries residuals(const PtvArfimaModel& model, const SamplePath& path,
                         int truncation) {
  if (truncation < 1)
    throw std::invalid_argument("residuals: truncation must be >= 1");
  const int n = path.n();
  if (n <= truncation)
    throw std::invalid_argument(
        "residuals: no time point has the full observed history "
        "(need n > truncation)");

  const int p = model.period();
  std::vector<std::vector<double>> pi;
  pi.reserve(static_cast<std::size_t>(p));
  for (int s = 1; s <= p; ++s)
    pi.push_back(pi_coeffs(model.d(SeasonIndex(s)), truncation, s).values);

  ResidualSeries out;
  out.first_t = truncation + 1;
  out.values.resize(static_cast<std::size_t>(n - truncation));
  for (int t = truncation + 1; t <= n; ++t) {
    const auto& w = pi[static_cast<std::size_t>(season_of(t, p).value() - 1)];
    const double* x = path.values.data() + (t - 1);
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    int j = 0;
    for (; j + 3 <= truncation; j += 4) {
      a0 += w[static_cast<std::size_t>(j)] * x[-j];
      a1 += w[static_cast<std::size_t>(j + 1)] * x[-(j + 1)];
      a2 += w[static_cast<std::size_t>(j + 2)] * x[-(j + 2)];
      a3 += w[static_cast<std::size_t>(j + 3)] * x[-(j + 3)];
    }
    for (; j <= truncation; ++j) a0 += w[static_cast<std::size_t>(j)] * x[-j];
    out.values[static_cast<std::size_t>(t - truncation - 1)] =
        (a0 + a1) + (a2 + a3);
  }
  return out;
}

std::uint64_t replicate_seed(std::uint64_t master_seed, int replicate) {
  return splitmix64(master_seed ^
                    (0x9E3779B97F4A7C15ULL *
                     (static_cast<std::uint64_t>(replicate) + 1ULL)));
}

Ensemble simulate_ensemble(const PtvArfimaModel& model, int n, int truncation,
                           int burn_in, int replicates,
                           std::uint64_t master_seed, int threads) {
  if (replicates < 1)
    throw std::invalid_argument("simulate_ensemble: replicates must be >= 1");
  Ensemble ens{model, {}, master_seed, n, truncation, burn_in};
  ens.replicates.resize(static_cast<std::size_t>(replicates),
                        SamplePath{model, {}, {}, 0, 0, 0});

  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  threads = std::min(threads, replicates);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= replicates) return;
      ens.replicates[static_cast<std::size_t>(r)] = simulate_path(
          model, n, truncation, burn_in, replicate_seed(master_seed, r));
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return ens;
}

}  // namespace ptvarfima
