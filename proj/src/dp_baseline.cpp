#include "srvf/dp_baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "srvf/quotient.hpp"

namespace srvf {

namespace {

std::vector<double> refined_ticks(const std::vector<double>& breaks, int r) {
  std::vector<double> ticks;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    for (int k = 0; k < r; ++k) {
      ticks.push_back(breaks[i] + (breaks[i + 1] - breaks[i]) * k / r);
    }
  }
  ticks.push_back(breaks.back());
  return ticks;
}

int locate(const std::vector<double>& breaks, double v) {
  auto it = std::upper_bound(breaks.begin(), breaks.end(), v);
  int i = static_cast<int>(it - breaks.begin()) - 1;
  return std::clamp(i, 0, static_cast<int>(breaks.size()) - 2);
}

// Sub-rectangles a straight chord crosses, one per block-boundary interval.
struct ChordPiece {
  double x0, y0, x1, y1;
  double w;
};

std::vector<ChordPiece> chord_pieces(const WeightGrid& grid, double x0, double y0,
                                     double x1, double y1) {
  std::vector<double> lambdas{0.0, 1.0};
  for (double s : grid.s_breaks()) {
    if (s > x0 + 1e-15 && s < x1 - 1e-15) lambdas.push_back((s - x0) / (x1 - x0));
  }
  for (double t : grid.t_breaks()) {
    if (t > y0 + 1e-15 && t < y1 - 1e-15) lambdas.push_back((t - y0) / (y1 - y0));
  }
  std::sort(lambdas.begin(), lambdas.end());
  std::vector<ChordPiece> out;
  for (std::size_t k = 0; k + 1 < lambdas.size(); ++k) {
    if (lambdas[k + 1] - lambdas[k] <= 1e-15) continue;
    ChordPiece p;
    p.x0 = x0 + lambdas[k] * (x1 - x0);
    p.y0 = y0 + lambdas[k] * (y1 - y0);
    p.x1 = x0 + lambdas[k + 1] * (x1 - x0);
    p.y1 = y0 + lambdas[k + 1] * (y1 - y0);
    double mx = 0.5 * (p.x0 + p.x1), my = 0.5 * (p.y0 + p.y1);
    p.w = grid.weight(locate(grid.s_breaks(), mx), locate(grid.t_breaks(), my));
    out.push_back(p);
  }
  return out;
}

double edge_value(const WeightGrid& grid, double x0, double y0, double x1,
                  double y1) {
  if (x1 - x0 <= 1e-15 || y1 - y0 <= 1e-15) return 0.0;  // axis-parallel
  double v = 0.0;
  for (const ChordPiece& p : chord_pieces(grid, x0, y0, x1, y1)) {
    if (p.w > 0.0) v += rect_value(p.w, p.x1 - p.x0, p.y1 - p.y0);
  }
  return v;
}

}  // namespace

std::vector<std::array<int, 2>> DpConfig::default_moves() {
  std::vector<std::array<int, 2>> moves;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) moves.push_back({a, b});
  }
  moves.push_back({1, 0});
  moves.push_back({0, 1});
  return moves;
}

MatchResult dp_match(const StepSrvf& q1, const StepSrvf& q2,
                     const DpConfig& config) {
  if (q1.dim() != q2.dim()) {
    throw std::invalid_argument("dp_match: dimension mismatch");
  }
  if (config.refine < 1) throw std::invalid_argument("dp_match: refine must be >= 1");
  bool has_diag = false;
  for (const auto& mv : config.moves) {
    if (mv[0] < 0 || mv[1] < 0 || (mv[0] == 0 && mv[1] == 0)) {
      throw std::invalid_argument("dp_match: moves must be monotone and nonzero");
    }
    if (mv[0] == 1 && mv[1] == 1) has_diag = true;
  }
  if (!has_diag) throw std::invalid_argument("dp_match: move set must contain (1,1)");

  WeightGrid grid = build_grid(q1, q2);
  std::vector<double> xs = refined_ticks(grid.s_breaks(), config.refine);
  std::vector<double> ys = refined_ticks(grid.t_breaks(), config.refine);
  const int nx = static_cast<int>(xs.size());
  const int ny = static_cast<int>(ys.size());

  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  std::vector<double> value(static_cast<std::size_t>(nx) * ny, kNegInf);
  std::vector<int> pred(static_cast<std::size_t>(nx) * ny, -1);
  auto id = [&](int a, int b) { return b * nx + a; };
  value[id(0, 0)] = 0.0;

  for (int b = 0; b < ny; ++b) {
    for (int a = 0; a < nx; ++a) {
      if (a == 0 && b == 0) continue;
      double best = kNegInf;
      int best_pred = -1;
      for (const auto& mv : config.moves) {
        int pa = a - mv[0], pb = b - mv[1];
        if (pa < 0 || pb < 0) continue;
        double pv = value[id(pa, pb)];
        if (pv == kNegInf) continue;
        double v = pv + edge_value(grid, xs[pa], ys[pb], xs[a], ys[b]);
        if (v > best) {
          best = v;
          best_pred = id(pa, pb);
        }
      }
      value[id(a, b)] = best;
      pred[id(a, b)] = best_pred;
    }
  }

  if (value[id(nx - 1, ny - 1)] == kNegInf) {
    throw std::runtime_error("dp_match: final node unreachable under move set");
  }

  // Backtrack the lattice path.
  std::vector<std::array<int, 2>> nodes;
  for (int cur = id(nx - 1, ny - 1); cur != -1; cur = pred[cur]) {
    nodes.push_back({cur % nx, cur / nx});
  }
  std::reverse(nodes.begin(), nodes.end());

  // Realize each lattice edge as a matching path: diagonal through positive
  // sub-rectangles, horizontal-then-vertical through the rest. This makes
  // the reported value exactly achievable by the extracted pair.
  MatchResult out;
  out.value = value[id(nx - 1, ny - 1)];
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    double x0 = xs[nodes[k][0]], y0 = ys[nodes[k][1]];
    double x1 = xs[nodes[k + 1][0]], y1 = ys[nodes[k + 1][1]];
    if (x1 - x0 <= 1e-15 || y1 - y0 <= 1e-15) {
      NSegment ns;
      ns.start = {x0, y0};
      ns.corner = {x1, y0};
      ns.end = {x1, y1};
      ns.start_vertex = {locate(grid.s_breaks(), x0 + 1e-15),
                         locate(grid.t_breaks(), y0 + 1e-15)};
      ns.end_vertex = ns.start_vertex;
      out.path.emplace_back(ns);
      continue;
    }
    PSegment ps;
    ps.points.push_back({x0, y0});
    for (const ChordPiece& p : chord_pieces(grid, x0, y0, x1, y1)) {
      if (p.w > 0.0) {
        ps.points.push_back({p.x1, p.y1});
        ps.value += rect_value(p.w, p.x1 - p.x0, p.y1 - p.y0);
        ps.block_slopes.push_back(
            {locate(grid.s_breaks(), 0.5 * (p.x0 + p.x1)),
             locate(grid.t_breaks(), 0.5 * (p.y0 + p.y1)),
             Slope::from_value((p.y1 - p.y0) / (p.x1 - p.x0))});
      } else {
        ps.points.push_back({p.x1, p.y0});
        ps.points.push_back({p.x1, p.y1});
      }
    }
    out.path.emplace_back(std::move(ps));
  }

  auto [g1, g2] = extract_reparams(out.path);
  out.gamma1 = std::move(g1);
  out.gamma2 = std::move(g2);
  double n1 = inner(q1, q1), n2 = inner(q2, q2);
  out.distance = std::sqrt(std::max(0.0, n1 + n2 - 2.0 * out.value));
  return out;
}

}  // namespace srvf
