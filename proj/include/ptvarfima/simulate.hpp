// Seeded generation of PtvARFIMA sample paths through the truncated causal
// representation X_t = sum_{j=0}^{M} psi_j^{s(t)} eps_{t-j}, and recovery of
// the residuals through the inverse weights. Paths are bit-reproducible from
// (model, n, M, burn_in, seed); ensembles are reproducible from a master
// seed regardless of thread schedule.
#pragma once

#include "ptvarfima/model.hpp"

#include <cstdint>
#include <vector>

namespace ptvarfima {

enum class NoiseDistribution { gaussian };

// One simulated realization. values holds X_1..X_n; noise holds the
// generating eps for every time in [1 - burn_in - truncation, n], so the
// noise that fed each retained observation is available for inversion
// tests. Outputs for t <= 0 are never materialized: each retained value is
// an explicit window sum, so discarding the burn-in segment is implicit.
struct SamplePath {
  PtvArfimaModel model;
  std::vector<double> values;
  std::vector<double> noise;
  std::uint64_t seed = 0;
  int truncation = 0;
  int burn_in = 0;

  int n() const { return static_cast<int>(values.size()); }
  long long first_noise_time() const {
    return 1LL - burn_in - truncation;
  }
  // eps at model time t, t in [first_noise_time(), n]
  double noise_at(long long t) const;
  // X at model time t, t in [1, n]
  double x_at(long long t) const;
};

SamplePath simulate_path(const PtvArfimaModel& model, int n, int truncation,
                         int burn_in, std::uint64_t seed,
                         NoiseDistribution dist = NoiseDistribution::gaussian);

// eps_hat_t = sum_{j=0}^{M} pi_j^{s(t)} X_{t-j}, computed for every t with a
// full observed history (t = M+1 .. n). Throws when no such t exists.
struct ResidualSeries {
  long long first_t = 0;
  std::vector<double> values;
};

ResidualSeries residuals(const PtvArfimaModel& model, const SamplePath& path,
                         int truncation);

struct Ensemble {
  PtvArfimaModel model;
  std::vector<SamplePath> replicates;
  std::uint64_t master_seed = 0;
  int n = 0;
  int truncation = 0;
  int burn_in = 0;
};

// Stateless replicate-seed derivation; replicate r's stream depends only on
// (master_seed, r).
std::uint64_t replicate_seed(std::uint64_t master_seed, int replicate);

// threads = 0 picks the hardware concurrency. Output is independent of the
// schedule: every replicate is generated from its own derived seed.
Ensemble simulate_ensemble(const PtvArfimaModel& model, int n, int truncation,
                           int burn_in, int replicates,
                           std::uint64_t master_seed, int threads = 0);

// Default generation parameters. Truncation bias in the season variance
// scales like M^{2d-1}; raise the truncation for d close to 1/2.
inline constexpr int kDefaultTruncation = 5000;

}  // namespace ptvarfima
