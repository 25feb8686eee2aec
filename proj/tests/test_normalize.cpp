#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

#include "art/normalize.hpp"
#include "art/stats.hpp"
#include "helpers.hpp"

using namespace art;
using namespace art::testing;

TEST_CASE("canonical linear sample spans the unit square diagonal") {
  const SamplePair two = canonical_linear_sample(2);
  REQUIRE(two.size() == 2);
  CHECK(two.x == std::vector<double>{0.0, 1.0});
  CHECK(two.y == std::vector<double>{0.0, 1.0});

  const SamplePair three = canonical_linear_sample(3);
  REQUIRE(three.size() == 3);
  CHECK(three.x[1] == 0.5);
  CHECK(three.y[1] == 0.5);

  const auto r = pearson(canonical_linear_sample(1000));
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("upper limits at depth zero and the (1,1) corner") {
  UpperLimitTable table({64, 8, RasterMode::EqualWidth});
  table.ensure(2);
  CHECK(table.get(Orientation::RowFirst, 0, 0) == 0.0);
  CHECK(table.get(Orientation::ColumnFirst, 0, 0) == 0.0);
  // An even split of the rasterized diagonal doubles every conditional mass.
  CHECK(table.get(Orientation::RowFirst, 1, 1) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(table.get(Orientation::ColumnFirst, 1, 1) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("upper limits grow with depth and stay positive") {
  AnalysisConfig cfg;
  UpperLimitTable& table = shared_limits(cfg, 7);
  double prev = 0.0;
  for (int d = 1; d <= 6; ++d) {
    const double v = table.get(Orientation::RowFirst, d, 1);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
  CHECK(table.get(Orientation::RowFirst, 1, 1) > 0.0);
}

TEST_CASE("limits are stable in the canonical sample size") {
  UpperLimitTable a({4096, 32, RasterMode::EqualWidth});
  UpperLimitTable b({8192, 32, RasterMode::EqualWidth});
  a.ensure(4);
  b.ensure(4);
  for (int r = 0; r <= 3; ++r) {
    for (int c = 0; c + r <= 4; ++c) {
      CHECK(std::fabs(a.get(Orientation::RowFirst, r, c) - b.get(Orientation::RowFirst, r, c)) < 1e-3);
    }
  }
}

TEST_CASE("missing entries are a config error") {
  UpperLimitTable table({64, 8, RasterMode::EqualWidth});
  table.ensure(2);
  CHECK_THROWS_AS(table.get(Orientation::RowFirst, 5, 5), ConfigError);
}

TEST_CASE("JSON round trip preserves every entry") {
  UpperLimitTable table({128, 8, RasterMode::EqualFrequency});
  table.ensure(3);
  const UpperLimitTable back = UpperLimitTable::from_json_text(table.to_json_text());
  CHECK(back.config() == table.config());
  CHECK(back.max_depth() == 3);
  for (int r = 0; r <= 3; ++r) {
    for (int c = 0; c + r <= 3; ++c) {
      CHECK(back.get(Orientation::RowFirst, r, c) == table.get(Orientation::RowFirst, r, c));
      CHECK(back.get(Orientation::ColumnFirst, r, c) == table.get(Orientation::ColumnFirst, r, c));
    }
  }
}

TEST_CASE("cache file is rebuilt when corrupt or mismatched") {
  const std::string path = "normalize_cache_test.json";
  const LimitConfig cfg{64, 8, RasterMode::EqualWidth};

  {
    std::ofstream out(path);
    out << "{ not json";
  }
  UpperLimitTable table = UpperLimitTable::load_or_compute(path, cfg, 2);
  CHECK(table.get(Orientation::RowFirst, 1, 1) == doctest::Approx(std::log(2.0)));

  // Reload hits the rewritten cache.
  const UpperLimitTable again = UpperLimitTable::load_or_compute(path, cfg, 2);
  CHECK(again.get(Orientation::RowFirst, 1, 1) == table.get(Orientation::RowFirst, 1, 1));

  // A different config ignores the cached file and recomputes.
  const UpperLimitTable other = UpperLimitTable::load_or_compute(path, {128, 8, RasterMode::EqualWidth}, 2);
  CHECK(other.config().m == 128);

  std::remove(path.c_str());
}
