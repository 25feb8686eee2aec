#include "doctest.h"

#include "art/report.hpp"
#include "art/synth.hpp"
#include "helpers.hpp"

using namespace art;
using namespace art::testing;

namespace {

ArtStatistics sample_stats(CharMatrices* m = nullptr) {
  const SamplePair s = generate({RelKind::Linear, 300, 0.1, 1, 61});
  AnalysisConfig cfg;
  return analyze_pair(s, cfg, shared_limits(cfg, 8), m);
}

}  // namespace

TEST_CASE("config echo carries every knob") {
  RunConfig cfg;
  cfg.analysis.g = 16;
  cfg.analysis.mode = RasterMode::EqualFrequency;
  cfg.seed = 77;
  const Json j = config_json(cfg);
  CHECK(j["grid_size"] == 16);
  CHECK(j["raster_mode"] == "equal-frequency");
  CHECK(j["epsilon"] == 0.1);
  CHECK(j["q"] == 0.3);
  CHECK(j["seed"] == 77);
  CHECK(j["labels"]["strong_min"] == 0.6);
}

TEST_CASE("stats report is versioned and parseable") {
  CharMatrices m;
  const ArtStatistics st = sample_stats(&m);
  const Json j = stats_report(st, {}, &m);
  CHECK(j["format"] == "art-stats-report");
  CHECK(j["version"] == kReportVersion);
  CHECK(j["stats"]["artmic"].get<double>() == st.artmic);
  CHECK(j["stats"]["n"] == 300);
  CHECK(j["stats"]["pearson"].get<double>() == *st.pearson);
  CHECK(!j["matrices"]["m_r"].empty());
  for (const auto& cell : j["matrices"]["m_r"]) {
    CHECK(cell["x"].get<int>() + cell["y"].get<int>() <= m.b_floor);
  }

  // Round trip through text.
  const Json back = Json::parse(j.dump());
  CHECK(back == j);
}

TEST_CASE("undefined correlation serializes as null") {
  ArtStatistics st;
  st.pearson = std::nullopt;
  CHECK(stats_json(st)["pearson"].is_null());
}

TEST_CASE("unscored pair records serialize with null stats") {
  PairRecord rec;
  rec.var_a = "a";
  rec.var_b = "b";
  rec.n_effective = 3;
  rec.labels = {"insufficient-data"};
  const Json j = pair_record_json(rec);
  CHECK(j["stats"].is_null());
  CHECK(j["labels"][0] == "insufficient-data");

  const Json report = mine_report({rec}, {});
  CHECK(report["format"] == "art-mine-report");
  CHECK(report["pairs"].size() == 1);
}

TEST_CASE("dot graph lists nodes and weighted edges") {
  PairRecord rec;
  rec.var_a = "a";
  rec.var_b = "b";
  rec.stats = ArtStatistics{};
  rec.stats->artmic = 0.5;

  PairRecord unscored;
  unscored.var_a = "a";
  unscored.var_b = "c";

  const std::string dot = dot_graph({"a", "b", "c"}, {rec, unscored}, "artmic");
  CHECK(dot.find("graph art {") == 0);
  CHECK(dot.find("\"c\";") != std::string::npos);
  CHECK(dot.find("\"a\" -- \"b\"") != std::string::npos);
  CHECK(dot.find("penwidth=3") != std::string::npos);  // 0.5 + 5 * 0.5
  CHECK(dot.find("\"a\" -- \"c\"") == std::string::npos);
}
