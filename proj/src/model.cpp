#include "ptvarfima/model.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ptvarfima {

SeasonIndex::SeasonIndex(int value) : value_(value) {
  if (value < 1)
    throw std::invalid_argument("SeasonIndex: seasons are numbered from 1");
}

PtvArfimaModel::PtvArfimaModel(int period, std::vector<double> d,
                               std::vector<double> sigma2)
    : period_(period), d_(std::move(d)), sigma2_(std::move(sigma2)) {
  if (period_ < 1) throw std::invalid_argument("model: period must be >= 1");
  if (d_.size() != static_cast<std::size_t>(period_))
    throw std::invalid_argument("model: d must have exactly `period` entries");
  if (sigma2_.size() != static_cast<std::size_t>(period_))
    throw std::invalid_argument(
        "model: sigma2 must have exactly `period` entries");
  for (double di : d_)
    if (!(di >= 0.0 && di < 0.5))
      throw std::invalid_argument(
          "model: every d_i must lie in [0, 1/2), got " + std::to_string(di));
  for (double s2 : sigma2_)
    if (!(s2 > 0.0))
      throw std::invalid_argument("model: every sigma2_i must be positive");
}

double PtvArfimaModel::d(SeasonIndex i) const {
  if (i.value() > period_)
    throw std::invalid_argument("model: season index exceeds period");
  return d_[static_cast<std::size_t>(i.value() - 1)];
}

double PtvArfimaModel::sigma2(SeasonIndex i) const {
  if (i.value() > period_)
    throw std::invalid_argument("model: season index exceeds period");
  return sigma2_[static_cast<std::size_t>(i.value() - 1)];
}

PtvArfimaModel new_model(int period, std::vector<double> d,
                         std::vector<double> sigma2) {
  return PtvArfimaModel(period, std::move(d), std::move(sigma2));
}

SeasonIndex season_of(long long t, int period) {
  if (period < 1) throw std::invalid_argument("season_of: period must be >= 1");
  long long r = (t - 1) % period;
  if (r < 0) r += period;
  return SeasonIndex(static_cast<int>(r) + 1);
}

SeasonIndex season_of(const PtvArfimaModel& model, long long t) {
  return season_of(t, model.period());
}

double d_at_offset(const PtvArfimaModel& model, SeasonIndex i,
                   long long offset) {
  return model.d(season_of(static_cast<long long>(i.value()) + offset,
                           model.period()));
}

double sigma2_at_offset(const PtvArfimaModel& model, SeasonIndex i,
                        long long offset) {
  return model.sigma2(season_of(static_cast<long long>(i.value()) + offset,
                                model.period()));
}

PtvArfimaModel model_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("model JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("period") || !doc.contains("d") ||
      !doc.contains("sigma2"))
    throw std::invalid_argument(
        "model JSON: expected object with keys period, d, sigma2");
  try {
    return PtvArfimaModel(doc.at("period").get<int>(),
                          doc.at("d").get<std::vector<double>>(),
                          doc.at("sigma2").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("model JSON: ") + e.what());
  }
}

PtvArfimaModel model_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

std::string model_to_json(const PtvArfimaModel& model) {
  nlohmann::json doc;
  doc["period"] = model.period();
  doc["d"] = model.d();
  doc["sigma2"] = model.sigma2();
  return doc.dump(2);
}

PtvArfimaModel figure1_model() {
  return PtvArfimaModel(2, {0.3, 0.4}, {1.0, 1.0});
}

PtvArfimaModel figure2_model() {
  return PtvArfimaModel(2, {0.09, 0.49}, {1.0, 1.0});
}

}  // namespace ptvarfima
