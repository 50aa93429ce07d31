#pragma once

#include <vector>

#include "srvf/curves.hpp"

namespace srvf {

/// Two step functions rewritten over their merged breakpoint partition, so
/// that every integral of interest becomes a finite sum.
struct RefinedPair {
  std::vector<double> breaks;
  std::vector<Point> a;
  std::vector<Point> b;
};

RefinedPair refine_pair(const StepSrvf& q1, const StepSrvf& q2);

/// Exact L2 inner product; piecewise-constant integrands are summed over the
/// common refinement, never quadrature.
double inner(const StepSrvf& q1, const StepSrvf& q2);

double l2_distance(const StepSrvf& q1, const StepSrvf& q2);

/// The right action (q*gamma)(t) = q(gamma(t)) sqrt(gamma'(t)). Intervals
/// where gamma is flat map to zero pieces, which are kept.
StepSrvf group_action(const StepSrvf& q, const PlReparam& gamma);

/// Great-circle distance acos<q1,q2> for unit-norm inputs.
double sphere_distance(const StepSrvf& q1, const StepSrvf& q2);

StepSrvf geodesic_l2(const StepSrvf& q1, const StepSrvf& q2, double tau);

/// Great-circle interpolation between unit-norm step functions; throws for
/// an antipodal pair.
StepSrvf geodesic_sphere(const StepSrvf& q1, const StepSrvf& q2, double tau);

/// Best possible inner product when one side is a single constant piece
/// w0 on an interval of length `interval_len`, together with the
/// reparametrization pair realizing it (identity on the q side, the
/// cumulative-density warp on the constant side).
struct ConstantMatch {
  double value = 0.0;
  PlReparam gamma_q = PlReparam::identity();
  PlReparam gamma_w = PlReparam::identity();
};

ConstantMatch constant_match_value(const StepSrvf& q, const Point& w0,
                                   double interval_len);

}  // namespace srvf
