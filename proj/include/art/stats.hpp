#pragma once

#include <optional>
#include <vector>

#include "art/normalize.hpp"

namespace art {

struct AnalysisConfig {
  int g = 32;
  RasterMode mode = RasterMode::EqualWidth;
  double epsilon = 0.1;  // ARTMCN near-maximum slack
  double q = 0.3;        // ARTLRD depth-threshold exponent
  int canonical_m = 4096;

  LimitConfig limit_config() const { return {canonical_m, g, mode}; }
};

// B(D) = 0.6 * log2(n), floored at 2 so the (1,1) index always exists.
double depth_budget(std::int64_t n);

// Normalized characteristic matrices over depth indices x, y >= 1 with
// x + y <= floor(B). Entries are clamped to [0, 1].
struct CharMatrices {
  double B = 0.0;
  int b_floor = 0;
  std::int64_t n = 0;
  int gx = 0, gy = 0;
  std::vector<double> mr, mc;  // dense (b_floor-1)^2; NaN outside the domain
  int clamp_warnings = 0;      // raw ratios above 1 + 1e-6

  int dim() const { return b_floor - 1; }
  bool in_domain(int x, int y) const { return x >= 1 && y >= 1 && x + y <= b_floor; }
  double r(int x, int y) const { return mr[(x - 1) * dim() + (y - 1)]; }
  double c(int x, int y) const { return mc[(x - 1) * dim() + (y - 1)]; }
};

CharMatrices characteristic_matrices(const EmpiricalGrid& grid, UpperLimitTable& limits, double B);

double artmic(const CharMatrices& m);
double artmas(const CharMatrices& m);
double artmev(const CharMatrices& m);
int artmcn(const CharMatrices& m, double epsilon);
double artlrd(const CharMatrices& m, double q);

// Product-moment correlation; nullopt when either variance is zero.
std::optional<double> pearson(const SamplePair& sample);

struct ArtStatistics {
  double artmic = 0.0;
  double artmas = 0.0;
  double artmev = 0.0;
  double artlrd = 0.0;
  int artmcn = 0;
  std::optional<double> pearson;
  // provenance
  std::int64_t n = 0;
  int gx = 0, gy = 0;
  double B = 0.0;
};

ArtStatistics analyze_pair(const SamplePair& sample, const AnalysisConfig& cfg, UpperLimitTable& limits,
                           CharMatrices* matrices_out = nullptr);

}  // namespace art
