#include "srvf/audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "srvf/quotient.hpp"

namespace srvf {

namespace {

struct Auditor {
  const WeightGrid& grid;
  double slack;
  std::vector<std::string>& problems;

  void fail(const std::string& msg) { problems.push_back(msg); }

  int locate(const std::vector<double>& breaks, double v) const {
    auto it = std::upper_bound(breaks.begin(), breaks.end(), v);
    int i = static_cast<int>(it - breaks.begin()) - 1;
    return std::clamp(i, 0, static_cast<int>(breaks.size()) - 2);
  }

  bool close(double a, double b) const {
    return std::fabs(a - b) <= slack * std::max({1.0, std::fabs(a), std::fabs(b)});
  }

  bool is_vertex(double s, double t) const {
    for (double sb : grid.s_breaks()) {
      if (std::fabs(s - sb) <= 1e-9) {
        for (double tb : grid.t_breaks()) {
          if (std::fabs(t - tb) <= 1e-9) return true;
        }
      }
    }
    return false;
  }

  // Verifies slope transitions and value of one P-segment from its polyline.
  void check_p(const PSegment& seg, int idx) {
    const auto& pts = seg.points;
    if (pts.size() < 2) {
      fail("P-segment " + std::to_string(idx) + " has fewer than two points");
      return;
    }
    if (!is_vertex(pts.front()[0], pts.front()[1]) ||
        !is_vertex(pts.back()[0], pts.back()[1])) {
      fail("P-segment " + std::to_string(idx) + " does not join vertices");
    }
    double value = 0.0;
    double last_slope = -1.0, last_w = 0.0;
    int last_bi = -1, last_bj = -1;
    for (std::size_t e = 0; e + 1 < pts.size(); ++e) {
      double ds = pts[e + 1][0] - pts[e][0];
      double dt = pts[e + 1][1] - pts[e][1];
      if (ds < -1e-12 || dt < -1e-12) {
        fail("P-segment " + std::to_string(idx) + " is not monotone");
        return;
      }
      if (ds <= 1e-14 && dt <= 1e-14) continue;
      double mx = 0.5 * (pts[e][0] + pts[e + 1][0]);
      double my = 0.5 * (pts[e][1] + pts[e + 1][1]);
      int bi = locate(grid.s_breaks(), mx);
      int bj = locate(grid.t_breaks(), my);
      double w = grid.weight(bi, bj);
      bool diagonal = ds > 1e-14 && dt > 1e-14;
      if (!diagonal) {
        if (w > 0.0) {
          fail("P-segment " + std::to_string(idx) +
               " crosses a positive block axis-parallel");
        }
        continue;
      }
      if (!(w > 0.0)) {
        fail("P-segment " + std::to_string(idx) +
             " crosses a non-positive block diagonally");
      }
      double slope = dt / ds;
      if (last_slope > 0.0) {
        // Successive diagonal blocks share a row (vertical-gridline
        // crossings) or a column (horizontal-gridline crossing); the slope
        // scales by the squared weight ratio, inverted for the latter.
        double expect;
        if (bj == last_bj) {
          expect = last_slope * (w / last_w) * (w / last_w);
        } else if (bi == last_bi) {
          expect = last_slope * (last_w / w) * (last_w / w);
        } else {
          fail("P-segment " + std::to_string(idx) +
               " jumps row and column between diagonal blocks");
          expect = slope;
        }
        if (!close(slope, expect)) {
          std::ostringstream os;
          os << "P-segment " << idx << " slope transition violated: got "
             << slope << ", expected " << expect;
          fail(os.str());
        }
      }
      last_slope = slope;
      last_w = w;
      last_bi = bi;
      last_bj = bj;
      value += rect_value(w, ds, dt);
    }
    if (!close(value, seg.value)) {
      std::ostringstream os;
      os << "P-segment " << idx << " value mismatch: recomputed " << value
         << " vs stored " << seg.value;
      fail(os.str());
    }
    if (!(seg.value > 0.0)) {
      fail("P-segment " + std::to_string(idx) + " has non-positive value");
    }
  }

  void check_n(const NSegment& seg, int idx) {
    long i0 = seg.start_vertex[0], j0 = seg.start_vertex[1];
    long i1 = seg.end_vertex[0], j1 = seg.end_vertex[1];
    if (i1 < i0 || j1 < j0 || (i1 == i0 && j1 == j0)) {
      fail("N-segment " + std::to_string(idx) + " is not monotone");
    }
    if (!grid.all_nonpositive(i0, i1 - 1, j0 - 1, j1) ||
        !grid.all_nonpositive(i0 - 1, i1, j0, j1 - 1)) {
      fail("N-segment " + std::to_string(idx) + " weight conditions violated");
    }
    if (seg.corner[0] != seg.end[0] || seg.corner[1] != seg.start[1]) {
      fail("N-segment " + std::to_string(idx) + " is not horizontal-then-vertical");
    }
  }

  // First and last diagonal-edge slopes of a P-segment, from its points.
  std::pair<double, double> edge_slopes(const PSegment& seg) const {
    double first = -1.0, last = -1.0;
    const auto& pts = seg.points;
    for (std::size_t e = 0; e + 1 < pts.size(); ++e) {
      double ds = pts[e + 1][0] - pts[e][0];
      double dt = pts[e + 1][1] - pts[e][1];
      if (ds > 1e-14 && dt > 1e-14) {
        double h = dt / ds;
        if (first < 0.0) first = h;
        last = h;
      }
    }
    return {first, last};
  }

  void check_junction(const PSegment& prev, const PSegment& next, int idx) {
    auto [pi, pj] = std::pair<int, int>{prev.end_vertex[0], prev.end_vertex[1]};
    auto [ni, nj] = std::pair<int, int>{next.start_vertex[0], next.start_vertex[1]};
    if (pi < 1 || pj < 1 || ni >= static_cast<int>(grid.m()) ||
        nj >= static_cast<int>(grid.n())) {
      fail("junction " + std::to_string(idx) + " touches the boundary unexpectedly");
      return;
    }
    double A = grid.weight(pi - 1, pj - 1);
    double B = grid.weight(ni, nj);
    double C = grid.weight(pi - 1, nj);
    double D = grid.weight(ni, pj - 1);
    MuInterval mu = mu_interval(A, B, C, D);
    double h_prev = edge_slopes(prev).second;
    double h_next = edge_slopes(next).first;
    if (!(h_prev > 0.0) || !(h_next > 0.0)) {
      fail("junction " + std::to_string(idx) + " lacks diagonal slopes");
      return;
    }
    double ratio = std::sqrt(h_next / h_prev);
    if (mu.empty()) {
      fail("junction " + std::to_string(idx) + " has an empty mu-interval");
      return;
    }
    if (ratio < mu.lo * (1.0 - slack) - slack ||
        (std::isfinite(mu.hi) && ratio > mu.hi * (1.0 + slack) + slack)) {
      std::ostringstream os;
      os << "junction " << idx << " ratio " << ratio << " outside ["
         << mu.lo << ", " << mu.hi << "]";
      fail(os.str());
    }
  }
};

}  // namespace

AuditReport audit_match(const WeightGrid& grid, const MatchResult& result,
                        const StepSrvf& q1, const StepSrvf& q2, double slack) {
  AuditReport report;
  Auditor a{grid, slack, report.problems};

  const auto& path = result.path;
  if (path.empty()) {
    a.fail("empty path");
    return report;
  }

  // Endpoint and contiguity checks on vertex indices.
  auto seg_start = [](const PathSegment& s) {
    return std::holds_alternative<PSegment>(s) ? std::get<PSegment>(s).start_vertex
                                               : std::get<NSegment>(s).start_vertex;
  };
  auto seg_end = [](const PathSegment& s) {
    return std::holds_alternative<PSegment>(s) ? std::get<PSegment>(s).end_vertex
                                               : std::get<NSegment>(s).end_vertex;
  };
  if (seg_start(path.front()) != std::array<int, 2>{0, 0}) a.fail("path does not start at (0,0)");
  if (seg_end(path.back()) !=
      std::array<int, 2>{static_cast<int>(grid.m()), static_cast<int>(grid.n())}) {
    a.fail("path does not end at (1,1)");
  }
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (seg_end(path[k]) != seg_start(path[k + 1])) a.fail("path is not contiguous");
    if (std::holds_alternative<NSegment>(path[k]) &&
        std::holds_alternative<NSegment>(path[k + 1])) {
      a.fail("two consecutive N-segments");
    }
  }

  double total = 0.0;
  const PSegment* prev_p = nullptr;
  int idx = 0;
  for (const PathSegment& seg : path) {
    if (std::holds_alternative<PSegment>(seg)) {
      const auto& p = std::get<PSegment>(seg);
      a.check_p(p, idx);
      if (prev_p != nullptr) a.check_junction(*prev_p, p, idx);
      prev_p = &p;
      total += p.value;
    } else {
      a.check_n(std::get<NSegment>(seg), idx);
    }
    ++idx;
  }

  if (!a.close(total, result.value)) a.fail("path value does not sum to reported value");

  double recomputed = inner(group_action(q1, result.gamma1),
                            group_action(q2, result.gamma2));
  if (std::fabs(recomputed - result.value) >
      slack * std::max({1.0, std::fabs(recomputed), std::fabs(result.value)})) {
    std::ostringstream os;
    os << "value " << result.value << " disagrees with inner product of acted pair "
       << recomputed;
    a.fail(os.str());
  }
  return report;
}

}  // namespace srvf
