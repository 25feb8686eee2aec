#include "art/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace art {

double depth_budget(std::int64_t n) {
  if (n < 2) throw DataError("depth budget needs n >= 2");
  return std::max(2.0, 0.6 * std::log2(static_cast<double>(n)));
}

CharMatrices characteristic_matrices(const EmpiricalGrid& grid, UpperLimitTable& limits, double B) {
  CharMatrices m;
  m.B = B;
  m.b_floor = static_cast<int>(std::floor(B));
  if (m.b_floor < 2) throw ConfigError("depth budget below 2");
  m.n = grid.n;
  m.gx = grid.gx();
  m.gy = grid.gy();
  limits.ensure(m.b_floor);

  const int d = m.dim();
  m.mr.assign(static_cast<std::size_t>(d) * d, std::numeric_limits<double>::quiet_NaN());
  m.mc.assign(static_cast<std::size_t>(d) * d, std::numeric_limits<double>::quiet_NaN());

  PartitionSolver solver(grid);
  const auto entry = [&](Orientation o, int x, int y) {
    const double limit = limits.get(o, x, y);
    if (limit <= 0.0) return 0.0;
    const double raw = solver.value({o, x, y}) / limit;
    if (raw > 1.0 + 1e-6) ++m.clamp_warnings;
    return std::clamp(raw, 0.0, 1.0);
  };
  for (int x = 1; x <= d; ++x) {
    for (int y = 1; x + y <= m.b_floor; ++y) {
      m.mr[(x - 1) * d + (y - 1)] = entry(Orientation::RowFirst, x, y);
      m.mc[(x - 1) * d + (y - 1)] = entry(Orientation::ColumnFirst, x, y);
    }
  }
  return m;
}

double artmic(const CharMatrices& m) {
  double best = 0.0;
  for (int x = 1; x <= m.dim(); ++x) {
    for (int y = 1; x + y <= m.b_floor; ++y) {
      best = std::max({best, m.r(x, y), m.c(x, y)});
    }
  }
  return best;
}

double artmas(const CharMatrices& m) {
  double best = 0.0;
  for (int x = 1; x <= m.dim(); ++x) {
    for (int y = 1; x + y <= m.b_floor; ++y) {
      best = std::max(best, std::abs(m.r(x, y) - m.c(y, x)));
    }
  }
  return best;
}

double artmev(const CharMatrices& m) {
  double best = 0.0;
  for (int y = 1; 1 + y <= m.b_floor; ++y) {
    best = std::max({best, m.r(1, y), m.c(y, 1)});
  }
  return best;
}

int artmcn(const CharMatrices& m, double epsilon) {
  if (epsilon <= 0.0 || epsilon >= 1.0) throw ConfigError("artmcn epsilon must be in (0,1)");
  const double bar = (1.0 - epsilon) * artmic(m);
  for (int total = 2; total <= m.b_floor; ++total) {
    for (int x = 1; x < total; ++x) {
      const int y = total - x;
      if (m.r(x, y) >= bar || m.c(x, y) >= bar) return total - 2;
    }
  }
  throw InternalError("artmcn: no qualifying index (the ARTMIC arg-max must qualify)");
}

double artlrd(const CharMatrices& m, double q) {
  if (q <= 0.0 || q >= 0.5) throw ConfigError("artlrd q must be in (0, 0.5)");
  const int t = static_cast<int>(std::ceil(std::pow(m.B, q)));
  const double mic = artmic(m);
  if (2 * t > m.b_floor) return 0.0;  // restricted index set is empty
  double deep = 0.0;
  for (int x = t; x <= m.dim(); ++x) {
    for (int y = t; x + y <= m.b_floor; ++y) {
      deep = std::max({deep, m.r(x, y), m.c(x, y)});
    }
  }
  return mic - deep;
}

std::optional<double> pearson(const SamplePair& raw) {
  const SamplePair s = drop_nonfinite(raw);
  const std::size_t n = s.size();
  if (n < 2) throw DataError("pearson needs at least 2 finite points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += s.x[i];
    my += s.y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = s.x[i] - mx;
    const double dy = s.y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

ArtStatistics analyze_pair(const SamplePair& sample, const AnalysisConfig& cfg, UpperLimitTable& limits,
                           CharMatrices* matrices_out) {
  if (!(limits.config() == cfg.limit_config())) {
    throw ConfigError("upper-limit table was built for a different configuration");
  }
  const SamplePair clean = drop_nonfinite(sample);
  if (clean.size() < 2) throw DataError("need at least 2 finite sample points");

  const EmpiricalGrid grid = build_grid(clean, cfg.mode, cfg.g);
  const double B = depth_budget(grid.n);
  const CharMatrices m = characteristic_matrices(grid, limits, B);

  ArtStatistics out;
  out.artmic = artmic(m);
  out.artmas = artmas(m);
  out.artmev = artmev(m);
  out.artmcn = artmcn(m, cfg.epsilon);
  out.artlrd = artlrd(m, cfg.q);
  out.pearson = pearson(clean);
  out.n = grid.n;
  out.gx = grid.gx();
  out.gy = grid.gy();
  out.B = B;
  if (matrices_out) *matrices_out = m;
  return out;
}

}  // namespace art
