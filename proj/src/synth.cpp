#include "art/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace art {

RelKind rel_kind_from_name(const std::string& name) {
  if (name == "independent") return RelKind::Independent;
  if (name == "linear") return RelKind::Linear;
  if (name == "sine") return RelKind::Sine5Pi;
  if (name == "parabola") return RelKind::Parabola;
  if (name == "circle") return RelKind::Circle;
  if (name == "local-random") return RelKind::LocalRandom;
  throw ConfigError("unknown relationship kind: " + name);
}

std::string rel_kind_name(RelKind kind) {
  switch (kind) {
    case RelKind::Independent: return "independent";
    case RelKind::Linear: return "linear";
    case RelKind::Sine5Pi: return "sine";
    case RelKind::Parabola: return "parabola";
    case RelKind::Circle: return "circle";
    case RelKind::LocalRandom: return "local-random";
  }
  throw ConfigError("unknown relationship kind");
}

SamplePair generate(const RelationshipSpec& spec) {
  if (spec.n < 2) throw ConfigError("sample size must be at least 2");
  if (spec.perturbation < 0.0) throw ConfigError("perturbation must be non-negative");
  if (spec.kind == RelKind::LocalRandom && spec.block_count < 1) {
    throw ConfigError("block count must be positive");
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = spec.perturbation;
  auto noise = [&]() { return p > 0.0 ? (2.0 * unit(rng) - 1.0) * p : 0.0; };
  const bool spaced = p == 0.0;
  auto abscissa = [&](int i) {
    return spaced ? static_cast<double>(i) / (spec.n - 1) : unit(rng);
  };

  SamplePair s;
  s.x.reserve(spec.n);
  s.y.reserve(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    double x = 0.0, y = 0.0;
    switch (spec.kind) {
      case RelKind::Independent:
        x = unit(rng);
        y = unit(rng);
        break;
      case RelKind::Linear:
        x = abscissa(i);
        y = x + noise();
        break;
      case RelKind::Sine5Pi: {
        // x' in [0,1] maps to the domain [0, 5*pi]
        x = abscissa(i);
        y = 0.5 * (1.0 + std::sin(5.0 * std::numbers::pi * x)) + noise();
        break;
      }
      case RelKind::Parabola: {
        // y = t^2 on t in [-1,1], rescaled to the unit square
        x = abscissa(i);
        const double t = 2.0 * x - 1.0;
        y = t * t + noise();
        break;
      }
      case RelKind::Circle: {
        const double theta =
            spaced ? 2.0 * std::numbers::pi * i / spec.n : 2.0 * std::numbers::pi * unit(rng);
        x = 0.5 * (1.0 + std::cos(theta)) + noise();
        y = 0.5 * (1.0 + std::sin(theta)) + noise();
        break;
      }
      case RelKind::LocalRandom: {
        // Global linear trend with uniform scatter inside equal x-blocks;
        // coarser blocks mean stronger local randomness.
        x = static_cast<double>(i) / (spec.n - 1);
        const int block = std::min(spec.block_count - 1, static_cast<int>(x * spec.block_count));
        const double lo = static_cast<double>(block) / spec.block_count;
        y = lo + unit(rng) / spec.block_count;
        break;
      }
    }
    s.add(x, y);
  }
  return s;
}

}  // namespace art
