#pragma once

#include <cstdint>
#include <vector>

#include "art/types.hpp"

namespace art {

enum class RasterMode { EqualWidth, EqualFrequency };

// Axis-aligned sub-rectangle in grid cell coordinates, half-open [lo, hi).
struct RectRegion {
  int xi_lo = 0;
  int xi_hi = 0;
  int yi_lo = 0;
  int yi_hi = 0;
};

struct RectMass {
  double p_joint = 0.0;  // probability mass inside the rectangle
  double p_x = 0.0;      // marginal mass of the rectangle's x-interval
  double p_y = 0.0;      // marginal mass of its y-interval
};

// Discretized bivariate sample: cut positions, per-cell counts and a 2-D prefix
// table answering rectangle count queries in constant time.
struct EmpiricalGrid {
  std::vector<double> x_cuts;  // gx+1 strictly increasing boundaries
  std::vector<double> y_cuts;  // gy+1
  std::vector<std::int64_t> counts;  // gx*gy, row-major [xi*gy + yi]
  std::vector<std::int64_t> prefix;  // (gx+1)*(gy+1), [i*(gy+1) + j]
  std::int64_t n = 0;

  int gx() const { return static_cast<int>(x_cuts.size()) - 1; }
  int gy() const { return static_cast<int>(y_cuts.size()) - 1; }

  std::int64_t cell(int xi, int yi) const { return counts[static_cast<std::size_t>(xi) * gy() + yi]; }

  // Count of points with x-index in [xlo, xhi) and y-index in [ylo, yhi).
  std::int64_t region_count(int xlo, int xhi, int ylo, int yhi) const {
    const int w = gy() + 1;
    return prefix[xhi * w + yhi] - prefix[xlo * w + yhi] - prefix[xhi * w + ylo] + prefix[xlo * w + ylo];
  }

  std::int64_t x_count(int xlo, int xhi) const { return region_count(xlo, xhi, 0, gy()); }
  std::int64_t y_count(int ylo, int yhi) const { return region_count(0, gx(), ylo, yhi); }

  // Builds a grid directly from a counts matrix (unit-spaced cuts). Used by
  // tests and the verification oracle path.
  static EmpiricalGrid from_counts(const std::vector<std::int64_t>& counts, int gx, int gy);
};

// Rasterizes a sample into at most g cells per axis. When an axis has <= g
// distinct values, cuts go at midpoints between consecutive distinct values
// (exact mode); otherwise cells follow `mode`. Boundary points land in the
// lower cell, the global maximum in the last cell.
EmpiricalGrid build_grid(const SamplePair& sample, RasterMode mode, int g);

RectMass rect_mass(const EmpiricalGrid& grid, const RectRegion& rect);

}  // namespace art
