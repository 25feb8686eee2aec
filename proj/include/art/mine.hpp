#pragma once

#include <optional>
#include <string>
#include <vector>

#include "art/csv.hpp"
#include "art/stats.hpp"

namespace art {

// One unordered variable pair, names in lexicographic order.
struct PairRecord {
  std::string var_a;
  std::string var_b;
  std::int64_t n_effective = 0;
  std::optional<ArtStatistics> stats;  // nullopt: insufficient data
  std::vector<std::string> labels;
};

struct FilterPredicate {
  std::string stat;  // artmic, artmas, artmev, artmcn, artlrd, pearson
  bool ge = true;    // >= when true, <= otherwise
  double threshold = 0.0;
};

// Parses "artmic>=0.6" / "artlrd<=0.2".
FilterPredicate parse_filter(const std::string& text);

double stat_value(const ArtStatistics& stats, const std::string& name);

struct LabelThresholds {
  double strong_min = 0.6;             // artmic >= -> strong, else weak
  double near_functional_ratio = 0.9;  // artmev >= ratio * artmic (artmic > 0)
  double symmetric_max = 0.1;          // artmas <=
  int simple_max = 1;                  // artmcn <= -> simple, else complex
  double local_random_min = 0.2;       // artlrd >=
};

std::vector<std::string> interpret(const ArtStatistics& stats, const LabelThresholds& thresholds);

// ART statistics for every unordered column pair, with pairwise deletion.
// Pairs with fewer than min_pair_rows effective rows are reported unscored.
std::vector<PairRecord> analyze_all_pairs(const Table& table, const AnalysisConfig& cfg,
                                          UpperLimitTable& limits, const LabelThresholds& thresholds = {},
                                          std::int64_t min_pair_rows = 10);

std::vector<PairRecord> apply_filters(const std::vector<PairRecord>& records,
                                      const std::vector<FilterPredicate>& predicates);

}  // namespace art
