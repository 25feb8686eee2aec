#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "art/mine.hpp"

namespace art {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

// Full run configuration; echoed into every report for reproducibility.
struct RunConfig {
  AnalysisConfig analysis;
  LabelThresholds thresholds;
  std::uint64_t seed = 0;
};

Json config_json(const RunConfig& cfg);
Json stats_json(const ArtStatistics& stats);
Json matrices_json(const CharMatrices& m);
Json pair_record_json(const PairRecord& rec);

Json stats_report(const ArtStatistics& stats, const RunConfig& cfg, const CharMatrices* matrices = nullptr);
Json mine_report(const std::vector<PairRecord>& records, const RunConfig& cfg);

// Undirected graph of the given pairs; pen width scales linearly with the
// chosen statistic.
std::string dot_graph(const std::vector<std::string>& variables, const std::vector<PairRecord>& edges,
                      const std::string& stat);

}  // namespace art
