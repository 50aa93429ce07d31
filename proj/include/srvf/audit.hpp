#pragma once

#include <string>
#include <vector>

#include "srvf/exact_match.hpp"

namespace srvf {

/// Result of re-validating a match against the canonical-form rules by
/// direct recomputation from the path geometry (independent of the sweep).
struct AuditReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Checks alternation (no two consecutive N-segments), per-segment geometry
/// and weights, the slope-transition equations, segment values, junction
/// mu-intervals, and consistency of the reported value with the inner
/// product of the acted pair.
AuditReport audit_match(const WeightGrid& grid, const MatchResult& result,
                        const StepSrvf& q1, const StepSrvf& q2,
                        double slack = 1e-9);

}  // namespace srvf
