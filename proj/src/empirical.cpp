#include "art/empirical.hpp"

#include <algorithm>

namespace art {

namespace {

// Cut positions for one axis. Exact midpoint cuts when there are at most g
// distinct values, otherwise g bins per the requested mode.
std::vector<double> axis_cuts(const std::vector<double>& values, RasterMode mode, int g) {
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> distinct;
  for (double v : sorted) {
    if (distinct.empty() || v != distinct.back()) distinct.push_back(v);
  }

  std::vector<double> cuts;
  if (static_cast<int>(distinct.size()) <= g) {
    cuts.push_back(distinct.front() - 0.5);
    for (std::size_t i = 1; i < distinct.size(); ++i) {
      cuts.push_back(0.5 * (distinct[i - 1] + distinct[i]));
    }
    cuts.push_back(distinct.back() + 0.5);
    return cuts;
  }

  const double lo = distinct.front();
  const double hi = distinct.back();
  if (mode == RasterMode::EqualWidth) {
    cuts.push_back(lo);
    for (int i = 1; i < g; ++i) cuts.push_back(lo + (hi - lo) * i / g);
    cuts.push_back(hi);
  } else {
    const std::size_t n = sorted.size();
    cuts.push_back(lo - 0.5);
    for (int k = 1; k < g; ++k) {
      const std::size_t i = k * n / g;
      const double c = 0.5 * (sorted[i - 1] + sorted[i]);
      if (c > cuts.back()) cuts.push_back(c);
    }
    cuts.push_back(hi + 0.5);
  }
  // Collapse duplicate boundaries (heavy ties); keeps cuts strictly increasing.
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// Cell index: first cut >= v bounds the cell from above, so values sitting
// exactly on a cut go to the lower cell; clamping sends the global minimum to
// cell 0 and the global maximum to the last cell.
int cell_index(const std::vector<double>& cuts, double v) {
  const auto it = std::lower_bound(cuts.begin(), cuts.end(), v);
  int i = static_cast<int>(it - cuts.begin()) - 1;
  const int g = static_cast<int>(cuts.size()) - 2;
  return std::clamp(i, 0, g);
}

}  // namespace

EmpiricalGrid EmpiricalGrid::from_counts(const std::vector<std::int64_t>& counts, int gx, int gy) {
  if (gx < 1 || gy < 1 || counts.size() != static_cast<std::size_t>(gx) * gy) {
    throw ConfigError("from_counts: inconsistent dimensions");
  }
  EmpiricalGrid grid;
  for (int i = 0; i <= gx; ++i) grid.x_cuts.push_back(i);
  for (int j = 0; j <= gy; ++j) grid.y_cuts.push_back(j);
  grid.counts = counts;
  grid.prefix.assign(static_cast<std::size_t>(gx + 1) * (gy + 1), 0);
  const int w = gy + 1;
  for (int i = 0; i < gx; ++i) {
    for (int j = 0; j < gy; ++j) {
      grid.n += counts[static_cast<std::size_t>(i) * gy + j];
      grid.prefix[(i + 1) * w + (j + 1)] = counts[static_cast<std::size_t>(i) * gy + j] +
                                           grid.prefix[i * w + (j + 1)] + grid.prefix[(i + 1) * w + j] -
                                           grid.prefix[i * w + j];
    }
  }
  return grid;
}

EmpiricalGrid build_grid(const SamplePair& raw, RasterMode mode, int g) {
  if (g < 2) throw ConfigError("grid size must be at least 2");
  const SamplePair sample = drop_nonfinite(raw);
  if (sample.size() < 2) throw DataError("need at least 2 finite sample points");

  EmpiricalGrid grid;
  grid.x_cuts = axis_cuts(sample.x, mode, g);
  grid.y_cuts = axis_cuts(sample.y, mode, g);
  const int gx = grid.gx();
  const int gy = grid.gy();
  grid.counts.assign(static_cast<std::size_t>(gx) * gy, 0);
  for (std::size_t k = 0; k < sample.size(); ++k) {
    const int xi = cell_index(grid.x_cuts, sample.x[k]);
    const int yi = cell_index(grid.y_cuts, sample.y[k]);
    ++grid.counts[static_cast<std::size_t>(xi) * gy + yi];
  }
  EmpiricalGrid out = EmpiricalGrid::from_counts(grid.counts, gx, gy);
  out.x_cuts = std::move(grid.x_cuts);
  out.y_cuts = std::move(grid.y_cuts);
  return out;
}

RectMass rect_mass(const EmpiricalGrid& grid, const RectRegion& r) {
  if (r.xi_lo < 0 || r.xi_lo >= r.xi_hi || r.xi_hi > grid.gx() || r.yi_lo < 0 || r.yi_lo >= r.yi_hi ||
      r.yi_hi > grid.gy()) {
    throw InternalError("rect_mass: rectangle out of grid bounds");
  }
  const double n = static_cast<double>(grid.n);
  RectMass m;
  m.p_joint = grid.region_count(r.xi_lo, r.xi_hi, r.yi_lo, r.yi_hi) / n;
  m.p_x = grid.x_count(r.xi_lo, r.xi_hi) / n;
  m.p_y = grid.y_count(r.yi_lo, r.yi_hi) / n;
  return m;
}

}  // namespace art
