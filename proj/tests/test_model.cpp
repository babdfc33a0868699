#include "doctest.h"

#include <stdexcept>

#include "ptvarfima/model.hpp"

using namespace ptvarfima;

TEST_CASE("model validation") {
  CHECK_NOTHROW(new_model(2, {0.3, 0.4}, {1.0, 1.0}));
  CHECK_NOTHROW(new_model(2, {0.09, 0.49}, {1.0, 1.0}));
  CHECK_NOTHROW(new_model(1, {0.0}, {2.5}));  // degenerate white noise

  CHECK_THROWS_AS(new_model(2, {0.5, 0.1}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(new_model(2, {-0.1, 0.1}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(new_model(2, {0.3}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(new_model(2, {0.3, 0.4}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(new_model(2, {0.3, 0.4}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(new_model(0, {}, {}), std::invalid_argument);
}

TEST_CASE("season indexing is total over the integers") {
  CHECK(season_of(3, 2).value() == 1);
  CHECK(season_of(4, 2).value() == 2);
  CHECK(season_of(-1, 3).value() == 2);
  CHECK(season_of(0, 3).value() == 3);
  CHECK(season_of(1, 1).value() == 1);
  CHECK(season_of(-1000001, 1).value() == 1);

  for (int p : {1, 2, 3, 7})
    for (int i = 1; i <= p; ++i)
      for (long long m : {-1000LL, -13LL, -1LL, 0LL, 1LL, 999LL})
        CHECK(season_of(i + p * m, p).value() == i);
}

TEST_CASE("memory parameter lookup rotates with the season") {
  const auto m = new_model(2, {0.3, 0.4}, {1.0, 1.0});
  CHECK(d_at_offset(m, SeasonIndex(1), 1) == 0.4);
  CHECK(d_at_offset(m, SeasonIndex(1), 2) == 0.3);
  CHECK(d_at_offset(m, SeasonIndex(2), 3) == 0.3);
  for (long long k = -12; k <= 12; ++k) {
    const long long kp = ((k % 2) + 2) % 2;
    CHECK(d_at_offset(m, SeasonIndex(1), k) ==
          d_at_offset(m, SeasonIndex(1), kp));
  }
  CHECK(sigma2_at_offset(new_model(2, {0.1, 0.2}, {1.0, 4.0}),
                         SeasonIndex(1), 1) == 4.0);
}

TEST_CASE("model JSON document round-trips") {
  const auto m = figure1_model();
  const auto back = model_from_json(model_to_json(m));
  CHECK(back.period() == m.period());
  CHECK(back.d() == m.d());
  CHECK(back.sigma2() == m.sigma2());

  CHECK_THROWS_AS(model_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(model_from_json("{\"period\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(
      model_from_json(R"({"period": 2, "d": [0.5, 0.1], "sigma2": [1, 1]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(model_from_json_file("/nonexistent/model.json"),
                  std::runtime_error);
}

TEST_CASE("figure models carry the documented parameters") {
  CHECK(figure1_model().d() == std::vector<double>{0.3, 0.4});
  CHECK(figure2_model().d() == std::vector<double>{0.09, 0.49});
  CHECK(figure1_model().sigma2() == std::vector<double>{1.0, 1.0});
}
