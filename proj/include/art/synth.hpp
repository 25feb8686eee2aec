#pragma once

#include <cstdint>
#include <string>

#include "art/types.hpp"

namespace art {

enum class RelKind { Independent, Linear, Sine5Pi, Parabola, Circle, LocalRandom };

RelKind rel_kind_from_name(const std::string& name);
std::string rel_kind_name(RelKind kind);

struct RelationshipSpec {
  RelKind kind = RelKind::Linear;
  int n = 1080;
  double perturbation = 0.0;  // additive uniform noise on [-p, p]
  int block_count = 4;        // local-random only
  std::uint64_t seed = 0;
};

// Deterministic synthetic sample for the given spec. Functional families use
// equally spaced abscissas when perturbation is 0 and pseudo-random ones
// otherwise; noise is added to y (to both coordinates for the circle).
SamplePair generate(const RelationshipSpec& spec);

}  // namespace art
