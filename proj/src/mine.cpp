#include "art/mine.hpp"

#include <algorithm>

namespace art {

FilterPredicate parse_filter(const std::string& text) {
  FilterPredicate p;
  auto pos = text.find(">=");
  if (pos != std::string::npos) {
    p.ge = true;
  } else {
    pos = text.find("<=");
    if (pos == std::string::npos) throw ConfigError("filter must look like 'artmic>=0.6': " + text);
    p.ge = false;
  }
  p.stat = text.substr(0, pos);
  try {
    p.threshold = std::stod(text.substr(pos + 2));
  } catch (const std::exception&) {
    throw ConfigError("bad filter threshold in '" + text + "'");
  }
  // validate the name eagerly
  stat_value(ArtStatistics{}, p.stat);
  return p;
}

double stat_value(const ArtStatistics& s, const std::string& name) {
  if (name == "artmic") return s.artmic;
  if (name == "artmas") return s.artmas;
  if (name == "artmev") return s.artmev;
  if (name == "artmcn") return s.artmcn;
  if (name == "artlrd") return s.artlrd;
  if (name == "pearson") return s.pearson.value_or(0.0);
  throw ConfigError("unknown statistic: '" + name + "'");
}

std::vector<std::string> interpret(const ArtStatistics& s, const LabelThresholds& t) {
  std::vector<std::string> labels;
  labels.push_back(s.artmic >= t.strong_min ? "strong" : "weak");
  if (s.artmic > 0.0 && s.artmev >= t.near_functional_ratio * s.artmic) labels.push_back("near-functional");
  if (s.artmas <= t.symmetric_max) labels.push_back("symmetric-topology");
  labels.push_back(s.artmcn <= t.simple_max ? "simple" : "complex");
  if (s.artlrd >= t.local_random_min) labels.push_back("locally-random");
  return labels;
}

std::vector<PairRecord> analyze_all_pairs(const Table& table, const AnalysisConfig& cfg,
                                          UpperLimitTable& limits, const LabelThresholds& thresholds,
                                          std::int64_t min_pair_rows) {
  if (table.width() < 2) throw ConfigError("need at least 2 variables to mine pairs");

  // Lexicographic column order makes the output independent of column order.
  std::vector<std::size_t> order(table.width());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return table.names[a] < table.names[b]; });

  std::vector<PairRecord> records;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      PairRecord rec;
      rec.var_a = table.names[order[i]];
      rec.var_b = table.names[order[j]];
      const SamplePair pair = table.pair(order[i], order[j]);
      rec.n_effective = static_cast<std::int64_t>(pair.size());
      if (rec.n_effective < min_pair_rows) {
        rec.labels.push_back("insufficient-data");
      } else {
        rec.stats = analyze_pair(pair, cfg, limits);
        rec.labels = interpret(*rec.stats, thresholds);
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<PairRecord> apply_filters(const std::vector<PairRecord>& records,
                                      const std::vector<FilterPredicate>& predicates) {
  if (predicates.empty()) return records;
  for (const auto& p : predicates) stat_value(ArtStatistics{}, p.stat);
  std::vector<PairRecord> out;
  for (const auto& rec : records) {
    if (!rec.stats) continue;
    bool keep = true;
    for (const auto& p : predicates) {
      const double v = stat_value(*rec.stats, p.stat);
      if (p.ge ? v < p.threshold : v > p.threshold) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(rec);
  }
  return out;
}

}  // namespace art
