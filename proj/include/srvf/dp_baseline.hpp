#pragma once

#include <array>
#include <vector>

#include "srvf/exact_match.hpp"

namespace srvf {

/// Grid-restricted dynamic-programming matcher: monotone lattice paths on
/// the refined grid (each block side subdivided `refine` times) under a
/// finite move set. Edge values are the exact contribution of the straight
/// chord, counting diagonal crossings of positive blocks only, so the DP
/// value never exceeds the exact optimum.
struct DpConfig {
  int refine = 1;
  std::vector<std::array<int, 2>> moves = default_moves();

  /// {(a,b) : 1 <= a,b <= 3} plus the two axis steps.
  static std::vector<std::array<int, 2>> default_moves();
};

MatchResult dp_match(const StepSrvf& q1, const StepSrvf& q2,
                     const DpConfig& config = {});

}  // namespace srvf
