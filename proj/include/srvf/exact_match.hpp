#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <utility>
#include <variant>
#include <vector>

#include "srvf/curves.hpp"
#include "srvf/grid.hpp"

namespace srvf {

/// Slope of a matching path stored as a dy/dx pair so that 0 and infinity
/// are exact; normalized so max(dy, dx) = 1.
struct Slope {
  double dy = 1.0;
  double dx = 1.0;

  static Slope from_value(double h);
  static Slope zero() { return {0.0, 1.0}; }
  static Slope infinite() { return {1.0, 0.0}; }

  bool is_zero() const { return dy == 0.0; }
  bool is_infinite() const { return dx == 0.0; }
  double value() const {
    return dx == 0.0 ? std::numeric_limits<double>::infinity() : dy / dx;
  }
};

/// Slope of the path through one traversed block.
struct BlockSlope {
  int bi = 0;  // 0-based block column
  int bj = 0;  // 0-based block row
  Slope slope;
};

/// Vertex-to-vertex path piece that is diagonal through positive-weight
/// blocks (with the squared-weight-ratio slope transitions) and
/// axis-parallel through non-positive ones. Carries positive value.
struct PSegment {
  std::vector<std::array<double, 2>> points;
  std::vector<BlockSlope> block_slopes;
  double value = 0.0;
  std::array<int, 2> start_vertex{0, 0};
  std::array<int, 2> end_vertex{0, 0};

  double initial_slope() const;
  double final_slope() const;
};

/// Horizontal-then-vertical vertex-to-vertex piece through a region of
/// non-positive weights; value is always zero.
struct NSegment {
  std::array<int, 2> start_vertex{0, 0};
  std::array<int, 2> end_vertex{0, 0};
  std::array<double, 2> start{0, 0};
  std::array<double, 2> corner{0, 0};
  std::array<double, 2> end{0, 0};
};

using PathSegment = std::variant<PSegment, NSegment>;

struct MatchResult {
  std::vector<PathSegment> path;
  PlReparam gamma1 = PlReparam::identity();
  PlReparam gamma2 = PlReparam::identity();
  double value = 0.0;
  double distance = 0.0;
};

/// Admissible interval for the junction ratio mu = sqrt(H_next/H_prev)
/// between consecutive P-segments, from the four junction weights. A and B
/// are the weights of the blocks in which the previous P-segment ends and
/// the next begins; C and D the two off corners.
struct MuInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty() const { return !(lo <= hi); }
};

MuInterval mu_interval(double A, double B, double C, double D);

/// Deterministic trace from a grid vertex following the P-segment slope
/// rules. Either terminates at a vertex (a valid P-segment) or exits the
/// grid through s=1 or t=1 at a non-vertex point.
struct TraceResult {
  bool terminated = false;
  std::array<int, 2> end_vertex{-1, -1};
  std::vector<std::array<double, 2>> points;
  std::vector<BlockSlope> block_slopes;
  double value = 0.0;
};

TraceResult trace_p_segment(const WeightGrid& grid, std::array<int, 2> start,
                            double h0, double vertex_tol = 1e-12);

struct SlopeRange {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool empty() const { return !(lo <= hi); }
};

/// All P-segments starting at `start` whose initial slope lies in `range`,
/// in increasing initial-slope order. Enumerated analytically: straightened
/// coordinates give, per boundary vertex adjacent to a crossed edge, the
/// unique initial slope whose trace passes through that vertex; the next
/// segment's slope is the least such slope above the current one.
std::vector<PSegment> enumerate_p_segments(const WeightGrid& grid,
                                           std::array<int, 2> start,
                                           SlopeRange range,
                                           double vertex_tol = 1e-12);

/// All N-segments starting at `start`; weight conditions on out-of-range
/// indices are vacuous.
std::vector<NSegment> enumerate_n_segments(const WeightGrid& grid,
                                           std::array<int, 2> start);

struct MatchOptions {
  double vertex_tol = 1e-12;
  /// Keep the full Pareto set of (value, final slope) states per vertex
  /// instead of the single best value.
  bool pareto = false;
};

/// Globally optimal matching of two step functions with nowhere-zero
/// pieces: row-order vertex sweep composing P- and N-segments under the
/// junction constraint.
MatchResult optimal_match(const StepSrvf& q1, const StepSrvf& q2,
                          const MatchOptions& options = {});

/// Reparametrization pair realizing a canonical path; the common parameter
/// is proportional to Manhattan length along the path.
std::pair<PlReparam, PlReparam> extract_reparams(
    const std::vector<PathSegment>& path);

}  // namespace srvf
