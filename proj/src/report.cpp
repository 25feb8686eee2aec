#include "art/report.hpp"

#include <sstream>

namespace art {

Json config_json(const RunConfig& cfg) {
  Json j;
  j["grid_size"] = cfg.analysis.g;
  j["raster_mode"] = cfg.analysis.mode == RasterMode::EqualWidth ? "equal-width" : "equal-frequency";
  j["epsilon"] = cfg.analysis.epsilon;
  j["q"] = cfg.analysis.q;
  j["canonical_m"] = cfg.analysis.canonical_m;
  j["seed"] = cfg.seed;
  j["labels"] = {{"strong_min", cfg.thresholds.strong_min},
                 {"near_functional_ratio", cfg.thresholds.near_functional_ratio},
                 {"symmetric_max", cfg.thresholds.symmetric_max},
                 {"simple_max", cfg.thresholds.simple_max},
                 {"local_random_min", cfg.thresholds.local_random_min}};
  return j;
}

Json stats_json(const ArtStatistics& s) {
  Json j;
  j["artmic"] = s.artmic;
  j["artmas"] = s.artmas;
  j["artmev"] = s.artmev;
  j["artmcn"] = s.artmcn;
  j["artlrd"] = s.artlrd;
  if (s.pearson) {
    j["pearson"] = *s.pearson;
  } else {
    j["pearson"] = nullptr;  // undefined (zero variance)
  }
  j["n"] = s.n;
  j["grid"] = {s.gx, s.gy};
  j["B"] = s.B;
  return j;
}

Json matrices_json(const CharMatrices& m) {
  Json j;
  j["B"] = m.B;
  j["n"] = m.n;
  j["grid"] = {m.gx, m.gy};
  auto rows = [&](const std::vector<double>& mat) {
    auto arr = Json::array();
    for (int x = 1; x <= m.dim(); ++x) {
      for (int y = 1; x + y <= m.b_floor; ++y) {
        arr.push_back({{"x", x}, {"y", y}, {"value", mat[(x - 1) * m.dim() + (y - 1)]}});
      }
    }
    return arr;
  };
  j["m_r"] = rows(m.mr);
  j["m_c"] = rows(m.mc);
  return j;
}

Json pair_record_json(const PairRecord& rec) {
  Json j;
  j["var_a"] = rec.var_a;
  j["var_b"] = rec.var_b;
  j["n_effective"] = rec.n_effective;
  if (rec.stats) {
    j["stats"] = stats_json(*rec.stats);
  } else {
    j["stats"] = nullptr;
  }
  j["labels"] = rec.labels;
  return j;
}

Json stats_report(const ArtStatistics& stats, const RunConfig& cfg, const CharMatrices* matrices) {
  Json j;
  j["format"] = "art-stats-report";
  j["version"] = kReportVersion;
  j["config"] = config_json(cfg);
  j["stats"] = stats_json(stats);
  if (matrices) j["matrices"] = matrices_json(*matrices);
  return j;
}

Json mine_report(const std::vector<PairRecord>& records, const RunConfig& cfg) {
  Json j;
  j["format"] = "art-mine-report";
  j["version"] = kReportVersion;
  j["config"] = config_json(cfg);
  auto arr = Json::array();
  for (const auto& rec : records) arr.push_back(pair_record_json(rec));
  j["pairs"] = arr;
  return j;
}

std::string dot_graph(const std::vector<std::string>& variables, const std::vector<PairRecord>& edges,
                      const std::string& stat) {
  std::ostringstream out;
  out << "graph art {\n  node [shape=circle];\n";
  for (const auto& v : variables) out << "  \"" << v << "\";\n";
  for (const auto& rec : edges) {
    if (!rec.stats) continue;
    const double v = stat_value(*rec.stats, stat);
    out << "  \"" << rec.var_a << "\" -- \"" << rec.var_b << "\" [penwidth=" << 0.5 + 5.0 * v
        << ", label=\"" << v << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace art
