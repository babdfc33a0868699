// The PtvARFIMA model object and the season/time indexing conventions shared
// by every other module. Time runs over all integers; a time t belongs to
// season i in {1, ..., p} when t = i + p*m for some integer m.
#pragma once

#include <string>
#include <vector>

namespace ptvarfima {

// 1-based season label. Range against a concrete period is checked by the
// operations that take a model.
class SeasonIndex {
 public:
  explicit SeasonIndex(int value);
  int value() const noexcept { return value_; }

  friend bool operator==(SeasonIndex a, SeasonIndex b) {
    return a.value_ == b.value_;
  }

 private:
  int value_;
};

// Periodically time-varying ARFIMA(0, d_t, 0): period p, one memory
// parameter d_i in [0, 1/2) and one noise variance sigma_i^2 > 0 per season.
// Immutable after validation. d_i = 0 is admitted as a degenerate
// white-noise season, an extension of the open interval (0, 1/2).
class PtvArfimaModel {
 public:
  PtvArfimaModel(int period, std::vector<double> d, std::vector<double> sigma2);

  int period() const noexcept { return period_; }
  const std::vector<double>& d() const noexcept { return d_; }
  const std::vector<double>& sigma2() const noexcept { return sigma2_; }

  double d(SeasonIndex i) const;
  double sigma2(SeasonIndex i) const;

 private:
  int period_;
  std::vector<double> d_;
  std::vector<double> sigma2_;
};

// Validating factory; throws std::invalid_argument on dimension mismatch,
// d outside [0, 1/2) or non-positive variance.
PtvArfimaModel new_model(int period, std::vector<double> d,
                         std::vector<double> sigma2);

// The unique i in [1, p] with t = i + p*m; total over all integers t.
SeasonIndex season_of(long long t, int period);
SeasonIndex season_of(const PtvArfimaModel& model, long long t);

// Memory parameter of the season reached from season i by `offset` steps;
// periodic in offset with period p.
double d_at_offset(const PtvArfimaModel& model, SeasonIndex i,
                   long long offset);
double sigma2_at_offset(const PtvArfimaModel& model, SeasonIndex i,
                        long long offset);

// JSON model document {"period": p, "d": [...], "sigma2": [...]}.
PtvArfimaModel model_from_json(const std::string& text);
PtvArfimaModel model_from_json_file(const std::string& path);
std::string model_to_json(const PtvArfimaModel& model);

// The two models whose autocovariance curves the `figures` command renders:
// p = 2, unit variances, d = (0.3, 0.4) and d = (0.09, 0.49).
PtvArfimaModel figure1_model();
PtvArfimaModel figure2_model();

}  // namespace ptvarfima
