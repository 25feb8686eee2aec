#pragma once

#include <map>
#include <string>
#include <tuple>

#include "art/partition.hpp"

namespace art {

// Equally spaced points on the diagonal of the unit square.
SamplePair canonical_linear_sample(int m);

struct LimitConfig {
  int m = 4096;                            // canonical linear sample size
  int g = 32;                              // working grid size
  RasterMode mode = RasterMode::EqualWidth;

  bool operator==(const LimitConfig&) const = default;
};

// Maximum restricted divergence upper limits, computed from the canonical
// linear sample via the partition DP and memoized per (orientation, r, c).
// Serializes to a versioned JSON cache; deleting the cache is always safe.
class UpperLimitTable {
 public:
  static constexpr int kFormatVersion = 1;

  explicit UpperLimitTable(LimitConfig cfg = {});

  // Computes every entry with r + c <= max_total_depth (no-op when already
  // covered).
  void ensure(int max_total_depth);

  double get(Orientation o, int r, int c) const;
  int max_depth() const { return max_depth_; }
  const LimitConfig& config() const { return cfg_; }

  std::string to_json_text() const;
  static UpperLimitTable from_json_text(const std::string& text);  // throws ConfigError

  void save(const std::string& path) const;  // write-temp + rename
  // Loads a compatible cache or recomputes (and rewrites) it.
  static UpperLimitTable load_or_compute(const std::string& path, const LimitConfig& cfg, int depth);

 private:
  LimitConfig cfg_;
  int max_depth_ = 0;
  std::map<std::tuple<int, int, int>, double> entries_;  // (orientation, r, c) -> I-dot
};

}  // namespace art
