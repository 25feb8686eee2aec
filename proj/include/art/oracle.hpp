#pragma once

#include "art/partition.hpp"

namespace art {

// Exhaustive reference maximizer over all alternant recursive partition trees.
// Shares no code path with the DP: it enumerates every legal tree structurally
// and evaluates the restricted-divergence leaf sum from raw rectangle masses.
// Guarded to gx, gy <= 8 and r + c <= 4.
double brute_force_max(const EmpiricalGrid& grid, const DepthSpec& spec);

struct VerifyResult {
  int cases = 0;
  double max_abs_diff = 0.0;
};

// DP value vs brute-force oracle on random small grids (counts in {0,1,2}).
VerifyResult verify_oracle_equivalence(int cases, int grid_max, int depth_max, std::uint64_t seed);

// Telescoped leaf sum of the extracted partition vs the DP value.
VerifyResult verify_telescoping(int cases, int grid_max, int depth_max, std::uint64_t seed);

}  // namespace art
