#include "art/oracle.hpp"

#include <cmath>
#include <random>

namespace art {

namespace {

double leaf_term(const EmpiricalGrid& grid, const RectRegion& rect) {
  const RectMass m = rect_mass(grid, rect);
  if (m.p_joint <= 0.0) return 0.0;
  return m.p_joint * std::log(m.p_joint / (m.p_x * m.p_y));
}

// Maximum leaf sum over all trees rooted at `rect` in state (o, r, c).
double enumerate(const EmpiricalGrid& grid, const RectRegion& rect, Orientation o, int r, int c) {
  if (r == 0 && c == 0) return leaf_term(grid, rect);
  if (o == Orientation::RowFirst && r == 0) o = Orientation::ColumnFirst;
  if (o == Orientation::ColumnFirst && c == 0) o = Orientation::RowFirst;

  const bool row = o == Orientation::RowFirst;
  const Orientation next = row ? Orientation::ColumnFirst : Orientation::RowFirst;
  const int nr = row ? r - 1 : r;
  const int nc = row ? c : c - 1;

  // Degenerate boundary split: one child covering the whole rectangle.
  double best = enumerate(grid, rect, next, nr, nc);
  const int lo = row ? rect.yi_lo : rect.xi_lo;
  const int hi = row ? rect.yi_hi : rect.xi_hi;
  for (int t = lo + 1; t < hi; ++t) {
    RectRegion a = rect, b = rect;
    if (row) {
      a.yi_hi = t;
      b.yi_lo = t;
    } else {
      a.xi_hi = t;
      b.xi_lo = t;
    }
    const double v = enumerate(grid, a, next, nr, nc) + enumerate(grid, b, next, nr, nc);
    if (v > best) best = v;
  }
  return best;
}

}  // namespace

double brute_force_max(const EmpiricalGrid& grid, const DepthSpec& spec) {
  if (grid.gx() > 8 || grid.gy() > 8) {
    throw ConfigError("brute_force_max: grid larger than 8x8 refused");
  }
  if (spec.r + spec.c > 4) {
    throw ConfigError("brute_force_max: depth budget r + c > 4 refused");
  }
  if (spec.r < 0 || spec.c < 0) throw ConfigError("recursion depths must be non-negative");
  return enumerate(grid, {0, grid.gx(), 0, grid.gy()}, spec.orientation, spec.r, spec.c);
}

namespace {

// Random grid with at least one point; counts drawn from {0,1,2}.
EmpiricalGrid random_grid(std::mt19937_64& rng, int grid_max) {
  std::uniform_int_distribution<int> dim(2, grid_max);
  std::uniform_int_distribution<int> count(0, 2);
  for (;;) {
    const int gx = dim(rng);
    const int gy = dim(rng);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(gx) * gy);
    std::int64_t total = 0;
    for (auto& c : counts) {
      c = count(rng);
      total += c;
    }
    if (total >= 2) return EmpiricalGrid::from_counts(counts, gx, gy);
  }
}

DepthSpec random_spec(std::mt19937_64& rng, int depth_max) {
  std::uniform_int_distribution<int> total(0, depth_max);
  const int d = total(rng);
  std::uniform_int_distribution<int> split(0, d);
  const int r = split(rng);
  const bool row_first = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  return {row_first ? Orientation::RowFirst : Orientation::ColumnFirst, r, d - r};
}

}  // namespace

VerifyResult verify_oracle_equivalence(int cases, int grid_max, int depth_max, std::uint64_t seed) {
  if (grid_max > 8 || depth_max > 4) {
    throw ConfigError("oracle guard: grids above 8x8 or depth budgets above 4 are refused");
  }
  std::mt19937_64 rng(seed);
  VerifyResult result;
  result.cases = cases;
  for (int i = 0; i < cases; ++i) {
    const EmpiricalGrid grid = random_grid(rng, grid_max);
    const DepthSpec spec = random_spec(rng, depth_max);
    const double dp = PartitionSolver(grid).value(spec);
    const double oracle = brute_force_max(grid, spec);
    result.max_abs_diff = std::max(result.max_abs_diff, std::abs(dp - oracle));
  }
  return result;
}

VerifyResult verify_telescoping(int cases, int grid_max, int depth_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  VerifyResult result;
  result.cases = cases;
  for (int i = 0; i < cases; ++i) {
    const EmpiricalGrid grid = random_grid(rng, grid_max);
    const DepthSpec spec = random_spec(rng, depth_max);
    PartitionSolver solver(grid);
    const double dp = solver.value(spec);
    const double leaf_sum = telescoped_value(grid, solver.extract(spec));
    result.max_abs_diff = std::max(result.max_abs_diff, std::abs(dp - leaf_sum));
  }
  return result;
}

}  // namespace art
