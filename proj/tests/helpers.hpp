#pragma once

#include <map>
#include <random>
#include <tuple>

#include "art/stats.hpp"

namespace art::testing {

// One upper-limit table per config for the whole test process.
inline UpperLimitTable& shared_limits(const AnalysisConfig& cfg, int depth) {
  static std::map<std::tuple<int, int, int>, UpperLimitTable> cache;
  const LimitConfig lc = cfg.limit_config();
  const std::tuple<int, int, int> key{lc.m, lc.g, lc.mode == RasterMode::EqualWidth ? 0 : 1};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, UpperLimitTable(lc)).first;
  it->second.ensure(depth);
  return it->second;
}

// g x g grid with `per_cell` points on the diagonal.
inline EmpiricalGrid diagonal_grid(int g, std::int64_t per_cell = 1) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(g) * g, 0);
  for (int i = 0; i < g; ++i) counts[static_cast<std::size_t>(i) * g + i] = per_cell;
  return EmpiricalGrid::from_counts(counts, g, g);
}

// Product (independence) grid: every cell holds the same count.
inline EmpiricalGrid uniform_grid(int g, std::int64_t per_cell = 1) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(g) * g, per_cell);
  return EmpiricalGrid::from_counts(counts, g, g);
}

inline EmpiricalGrid random_small_grid(std::mt19937_64& rng, int gmax = 6, int cmax = 2) {
  std::uniform_int_distribution<int> dim(2, gmax);
  std::uniform_int_distribution<std::int64_t> count(0, cmax);
  for (;;) {
    const int gx = dim(rng);
    const int gy = dim(rng);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(gx) * gy);
    std::int64_t total = 0;
    for (auto& c : counts) total += (c = count(rng));
    if (total >= 2) return EmpiricalGrid::from_counts(counts, gx, gy);
  }
}

inline EmpiricalGrid transposed(const EmpiricalGrid& g) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(g.gx()) * g.gy());
  for (int i = 0; i < g.gx(); ++i) {
    for (int j = 0; j < g.gy(); ++j) counts[static_cast<std::size_t>(j) * g.gx() + i] = g.cell(i, j);
  }
  return EmpiricalGrid::from_counts(counts, g.gy(), g.gx());
}

}  // namespace art::testing
