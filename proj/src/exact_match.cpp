#include "srvf/exact_match.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "srvf/quotient.hpp"

namespace srvf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Coordinate with an infinitesimal tag, used to follow the one-sided limit
// of traces whose slope approaches a vertex-hitting slope from above. Along
// such a limit the x-coordinates only ever sit at or infinitesimally left
// of their double value, and y-coordinates at or infinitesimally above, so
// the tags never cancel.
struct Coord {
  double v = 0.0;
  int eps = 0;  // -1: v - 0+, 0: exact, +1: v + 0+
};

int combine_eps(int a, int b) { return a != 0 ? a : b; }

// Three-way comparison against an exact gridline value.
int cmp(const Coord& a, double b, double tol) {
  if (a.v < b - tol) return -1;
  if (a.v > b + tol) return 1;
  return a.eps;
}

enum class Mode { kExact, kLimitAbove };

struct LastPositive {
  double w = 1.0;      // weight of the last block traversed diagonally
  double alpha = 1.0;  // straightened column stretch of that block
  double beta = 1.0;   // straightened row stretch of that block
  double slope = 1.0;  // true slope through that block
};

struct TraceEngine {
  const WeightGrid& grid;
  Mode mode;
  double vtol;
  bool want_candidates;

  TraceResult result;
  std::vector<double> candidates;

  // Current point and block.
  Coord x, y;
  int bi = 0, bj = 0;
  enum class Motion { kDiag, kHoriz, kVert } motion = Motion::kDiag;
  double sigma = 1.0;  // slope, valid while diagonal

  LastPositive last;
  // Straightened coordinates: in them the whole trace is the line
  // tau = h * sig through the start vertex.
  double sig_s = 0.0, tau_s = 0.0;
  double alpha_cur = 1.0, beta_cur = 1.0;
  double sig_colleft = 0.0;    // straightened abscissa of current column's left line
  double tau_rowbottom = 0.0;  // straightened ordinate of current row's bottom line

  TraceEngine(const WeightGrid& g, Mode md, double tol, bool cands)
      : grid(g), mode(md), vtol(tol), want_candidates(cands) {}

  double sx(int i) const { return grid.s_breaks()[i]; }
  double ty(int j) const { return grid.t_breaks()[j]; }
  int m() const { return static_cast<int>(grid.m()); }
  int n() const { return static_cast<int>(grid.n()); }

  void add_candidate(double h) {
    if (want_candidates && std::isfinite(h) && h > 0.0) candidates.push_back(h);
  }

  void push_point(double px, double py) {
    auto& pts = result.points;
    if (!pts.empty() && pts.back()[0] == px && pts.back()[1] == py) return;
    pts.push_back({px, py});
  }

  void record_block(int i, int j, Slope s) {
    result.block_slopes.push_back({i, j, s});
  }

  // Crossing a vertical gridline into block (bi+1, bj).
  void enter_right() {
    sig_colleft = sig_s;
    double wnew = grid.weight(bi + 1, bj);
    if (wnew > 0.0) {
      double r = wnew / last.w;
      sigma = last.slope * r * r;
      alpha_cur = last.alpha * r * r;
      beta_cur = last.beta;
      last = {wnew, alpha_cur, beta_cur, sigma};
      motion = Motion::kDiag;
      record_block(bi + 1, bj, Slope::from_value(sigma));
    } else {
      alpha_cur = 0.0;
      motion = Motion::kHoriz;
      record_block(bi + 1, bj, Slope::zero());
    }
    ++bi;
  }

  // Crossing a horizontal gridline into block (bi, bj+1).
  void enter_above() {
    tau_rowbottom = tau_s;
    double wnew = grid.weight(bi, bj + 1);
    if (wnew > 0.0) {
      double r = wnew / last.w;
      sigma = last.slope / (r * r);
      beta_cur = last.beta * r * r;
      alpha_cur = last.alpha;
      last = {wnew, alpha_cur, beta_cur, sigma};
      motion = Motion::kDiag;
      record_block(bi, bj + 1, Slope::from_value(sigma));
    } else {
      beta_cur = 0.0;
      motion = Motion::kVert;
      record_block(bi, bj + 1, Slope::infinite());
    }
    ++bj;
  }

  // Runs the trace; returns true when it terminated at a vertex.
  bool run(std::array<int, 2> start, double h0) {
    bi = start[0];
    bj = start[1];
    x = {sx(bi), 0};
    y = {ty(bj), 0};
    sigma = h0;
    last = {grid.weight(bi, bj), 1.0, 1.0, h0};
    motion = Motion::kDiag;
    push_point(x.v, y.v);
    record_block(bi, bj, Slope::from_value(h0));

    int steps = 0;
    const int max_steps = 2 * (m() + n()) + 8;
    while (++steps <= max_steps) {
      if (motion == Motion::kDiag) {
        if (!advance_diag()) return result.terminated;
      } else if (motion == Motion::kHoriz) {
        if (!advance_horiz()) return result.terminated;
      } else {
        if (!advance_vert()) return result.terminated;
      }
    }
    throw std::runtime_error("trace_p_segment: step budget exceeded");
  }

  // One diagonal block traversal; false ends the trace.
  bool advance_diag() {
    double X = sx(bi + 1), Y = ty(bj + 1);
    Coord y_at_x{y.v + sigma * (X - x.v),
                 combine_eps(y.eps, x.eps < 0 ? +1 : 0)};
    double tol_y = vtol * grid.block_height(bj);
    int c = cmp(y_at_x, Y, tol_y);

    if (c < 0) {
      // Exits through the right edge at (X, y_at_x).
      result.value += rect_value(grid.weight(bi, bj), X - x.v, y_at_x.v - y.v);
      sig_s += alpha_cur * (X - x.v);
      tau_s += beta_cur * (y_at_x.v - y.v);
      if (sig_s > 0.0) {
        add_candidate((tau_rowbottom + beta_cur * grid.block_height(bj)) / sig_s);
      }
      push_point(X, std::min(y_at_x.v, Y));
      if (bi + 1 == m()) return false;  // exits the grid at a non-vertex
      x = {X, 0};
      y = y_at_x;
      enter_right();
      return true;
    }
    if (c > 0) {
      // Exits through the top edge at (x_at_y, Y).
      Coord x_at_y{std::min(x.v + (Y - y.v) / sigma, X),
                   combine_eps(x.eps, y.eps > 0 ? -1 : 0)};
      result.value += rect_value(grid.weight(bi, bj), x_at_y.v - x.v, Y - y.v);
      sig_s += alpha_cur * (x_at_y.v - x.v);
      tau_s += beta_cur * (Y - y.v);
      if (sig_colleft > 0.0) add_candidate(tau_s / sig_colleft);
      push_point(x_at_y.v, Y);
      if (bj + 1 == n()) return false;
      x = x_at_y;
      y = {Y, 0};
      enter_above();
      return true;
    }

    // Corner coincidence at the vertex (bi+1, bj+1).
    result.value += rect_value(grid.weight(bi, bj), X - x.v, Y - y.v);
    sig_s += alpha_cur * (X - x.v);
    tau_s += beta_cur * (Y - y.v);
    if (mode == Mode::kExact) {
      push_point(X, Y);
      result.terminated = true;
      result.end_vertex = {bi + 1, bj + 1};
      return false;
    }
    // Limit from above: pass infinitesimally left of the corner, crossing
    // the horizontal gridline first and the vertical one after.
    if (sig_colleft > 0.0) add_candidate(tau_s / sig_colleft);
    push_point(X, Y);
    if (bj + 1 == n()) return false;
    x = {X, -1};
    y = {Y, 0};
    enter_above();
    return true;
  }

  bool advance_horiz() {
    double X = sx(bi + 1);
    if (sig_s > 0.0) {
      add_candidate((tau_rowbottom + beta_cur * grid.block_height(bj)) / sig_s);
    }
    push_point(X, y.v);
    if (bi + 1 == m()) return false;
    x = {X, 0};
    enter_right();
    return true;
  }

  bool advance_vert() {
    double Y = ty(bj + 1);
    if (sig_colleft > 0.0) add_candidate(tau_s / sig_colleft);
    push_point(x.v, Y);
    if (bj + 1 == n()) return false;
    y = {Y, 0};
    enter_above();
    return true;
  }
};

struct TraceRun {
  TraceResult result;
  std::vector<double> candidates;
};

TraceRun run_trace(const WeightGrid& grid, std::array<int, 2> start, double h0,
                   double vtol, Mode mode, bool want_candidates) {
  if (start[0] < 0 || start[1] < 0 || start[0] >= static_cast<int>(grid.m()) ||
      start[1] >= static_cast<int>(grid.n())) {
    throw std::invalid_argument("trace: start vertex has no block above-right");
  }
  if (!(grid.weight(start[0], start[1]) > 0.0)) {
    throw std::invalid_argument("trace: start block has non-positive weight");
  }
  if (!(h0 > 0.0) || !std::isfinite(h0)) {
    throw std::invalid_argument("trace: initial slope must be positive and finite");
  }
  TraceEngine eng(grid, mode, vtol, want_candidates);
  eng.run(start, h0);
  return {std::move(eng.result), std::move(eng.candidates)};
}

// Candidate initial slopes of the limit trace with slope 0+: it stays in
// the start row, so the candidates are the row-top vertices over the
// straightened widths accumulated left to right.
std::vector<double> zero_slope_candidates(const WeightGrid& grid,
                                          std::array<int, 2> start) {
  std::vector<double> out;
  int vi = start[0], vj = start[1];
  double dt = grid.block_height(vj);
  double w_p = grid.weight(vi, vj);
  double alpha_p = 1.0;
  double sig = 0.0;
  for (int k = vi; k < static_cast<int>(grid.m()); ++k) {
    double w = grid.weight(k, vj);
    if (w > 0.0) {
      double r = w / w_p;
      double alpha = (k == vi) ? 1.0 : alpha_p * r * r;
      sig += alpha * grid.block_width(k);
      w_p = w;
      alpha_p = alpha;
    }
    if (sig > 0.0) out.push_back(dt / sig);
  }
  return out;
}

PSegment to_p_segment(TraceResult&& tr, std::array<int, 2> start) {
  PSegment seg;
  seg.points = std::move(tr.points);
  seg.block_slopes = std::move(tr.block_slopes);
  seg.value = tr.value;
  seg.start_vertex = start;
  seg.end_vertex = tr.end_vertex;
  return seg;
}

}  // namespace

Slope Slope::from_value(double h) {
  if (h <= 0.0) return zero();
  if (std::isinf(h)) return infinite();
  if (h >= 1.0) return {1.0, 1.0 / h};
  return {h, 1.0};
}

double PSegment::initial_slope() const {
  return block_slopes.front().slope.value();
}

double PSegment::final_slope() const {
  for (auto it = block_slopes.rbegin(); it != block_slopes.rend(); ++it) {
    if (!it->slope.is_zero() && !it->slope.is_infinite()) return it->slope.value();
  }
  return 0.0;
}

MuInterval mu_interval(double A, double B, double C, double D) {
  if (!(A > 0.0) || !(B > 0.0)) {
    throw std::invalid_argument("mu_interval: junction blocks must have positive weight");
  }
  MuInterval out;
  out.lo = (D > 0.0) ? (D * D) / (A * B) : 0.0;
  out.hi = (C > 0.0) ? (A * B) / (C * C) : kInf;
  return out;
}

TraceResult trace_p_segment(const WeightGrid& grid, std::array<int, 2> start,
                            double h0, double vertex_tol) {
  return run_trace(grid, start, h0, vertex_tol, Mode::kExact, false).result;
}

std::vector<PSegment> enumerate_p_segments(const WeightGrid& grid,
                                           std::array<int, 2> start,
                                           SlopeRange range, double vertex_tol) {
  std::vector<PSegment> out;
  if (range.empty()) return out;
  double lo = std::max(range.lo, 0.0);
  double hi = range.hi;
  if (!(hi > 0.0)) return out;

  auto in_range = [&](double h) {
    return h >= lo * (1.0 - 1e-12) && h <= hi * (1.0 + 1e-12);
  };

  double h = lo;
  if (h > 0.0 && std::isfinite(h)) {
    auto tr = run_trace(grid, start, h, vertex_tol, Mode::kExact, false);
    if (tr.result.terminated) out.push_back(to_p_segment(std::move(tr.result), start));
  }

  const int cap = 64 * static_cast<int>((grid.m() + 1) * (grid.n() + 1)) + 64;
  for (int iter = 0; iter < cap; ++iter) {
    std::vector<double> cands;
    if (h <= 0.0) {
      cands = zero_slope_candidates(grid, start);
    } else {
      cands = run_trace(grid, start, h, vertex_tol, Mode::kLimitAbove, true).candidates;
    }
    double next = kInf;
    for (double c : cands) {
      if (c > h * (1.0 + 1e-12) && c > 0.0 && c < next) next = c;
    }
    if (!std::isfinite(next) || next > hi * (1.0 + 1e-12)) break;
    if (in_range(next)) {
      auto tr = run_trace(grid, start, next, vertex_tol, Mode::kExact, false);
      if (tr.result.terminated) {
        out.push_back(to_p_segment(std::move(tr.result), start));
      }
    }
    h = next;
  }
  return out;
}

std::vector<NSegment> enumerate_n_segments(const WeightGrid& grid,
                                           std::array<int, 2> start) {
  std::vector<NSegment> out;
  long i0 = start[0], j0 = start[1];
  long m = static_cast<long>(grid.m()), n = static_cast<long>(grid.n());
  for (long i1 = i0; i1 <= m; ++i1) {
    for (long j1 = j0; j1 <= n; ++j1) {
      if (i1 == i0 && j1 == j0) continue;
      if (!grid.all_nonpositive(i0, i1 - 1, j0 - 1, j1)) continue;
      if (!grid.all_nonpositive(i0 - 1, i1, j0, j1 - 1)) continue;
      NSegment seg;
      seg.start_vertex = {static_cast<int>(i0), static_cast<int>(j0)};
      seg.end_vertex = {static_cast<int>(i1), static_cast<int>(j1)};
      seg.start = {grid.s_breaks()[i0], grid.t_breaks()[j0]};
      seg.corner = {grid.s_breaks()[i1], grid.t_breaks()[j0]};
      seg.end = {grid.s_breaks()[i1], grid.t_breaks()[j1]};
      out.push_back(seg);
    }
  }
  return out;
}

namespace {

struct SweepState {
  double value = 0.0;
  bool last_is_n = false;
  bool has_prev_p = false;
  std::array<int, 2> p_end{0, 0};  // vertex where the last P-segment ended
  double final_slope = 0.0;
  int pred_vertex = -1;  // flat vertex index of predecessor, -1 for the source
  int pred_state = -1;
  std::optional<PathSegment> via;
};

bool same_signature(const SweepState& a, const SweepState& b) {
  if (a.last_is_n != b.last_is_n || a.has_prev_p != b.has_prev_p) return false;
  if (!a.has_prev_p) return true;
  if (a.p_end != b.p_end) return false;
  double num = std::max(a.final_slope, b.final_slope);
  double den = std::min(a.final_slope, b.final_slope);
  return den > 0.0 && num <= den * (1.0 + 1e-12);
}

}  // namespace

MatchResult optimal_match(const StepSrvf& q1, const StepSrvf& q2,
                          const MatchOptions& options) {
  if (q1.dim() != q2.dim()) {
    throw std::invalid_argument("optimal_match: dimension mismatch");
  }
  WeightGrid grid = build_grid(q1, q2);
  const int m = static_cast<int>(grid.m());
  const int n = static_cast<int>(grid.n());
  const int vcols = m + 1;
  auto vid = [&](int i, int j) { return j * vcols + i; };

  std::vector<std::vector<SweepState>> states(
      static_cast<std::size_t>(vcols * (n + 1)));

  auto insert_state = [&](int i, int j, SweepState&& st) {
    auto& bucket = states[vid(i, j)];
    if (!options.pareto) {
      if (bucket.empty()) {
        bucket.push_back(std::move(st));
      } else if (st.value > bucket.front().value) {
        bucket.front() = std::move(st);
      }
      return;
    }
    for (auto& existing : bucket) {
      if (same_signature(existing, st)) {
        if (st.value > existing.value) existing = std::move(st);
        return;
      }
    }
    bucket.push_back(std::move(st));
  };

  states[vid(0, 0)].push_back(SweepState{});

  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= m; ++i) {
      // Take a copy: extensions never target the current vertex, but the
      // container may reallocate while we append states elsewhere.
      const auto bucket = states[vid(i, j)];
      if (bucket.empty()) continue;

      const bool has_upright = (i < m && j < n);
      const double w_upright = has_upright ? grid.weight(i, j) : 0.0;

      // N-segments are only possible when the block above-right is
      // non-positive or missing.
      std::vector<NSegment> nsegs;
      if (!has_upright || !(w_upright > 0.0)) {
        nsegs = enumerate_n_segments(grid, {i, j});
      }

      for (std::size_t si = 0; si < bucket.size(); ++si) {
        const SweepState& st = bucket[si];

        if (!st.last_is_n) {
          for (const NSegment& ns : nsegs) {
            SweepState nxt = st;
            nxt.last_is_n = true;
            nxt.pred_vertex = vid(i, j);
            nxt.pred_state = static_cast<int>(si);
            nxt.via = PathSegment(ns);
            insert_state(ns.end_vertex[0], ns.end_vertex[1], std::move(nxt));
          }
        }

        if (has_upright && w_upright > 0.0) {
          SlopeRange range{0.0, kInf};
          if (st.has_prev_p) {
            double A = grid.weight(st.p_end[0] - 1, st.p_end[1] - 1);
            double B = w_upright;
            double C = grid.weight(st.p_end[0] - 1, j);
            double D = grid.weight(i, st.p_end[1] - 1);
            MuInterval mu = mu_interval(A, B, C, D);
            if (mu.empty()) continue;
            range.lo = mu.lo * mu.lo * st.final_slope * (1.0 - 1e-9);
            range.hi = mu.hi * mu.hi * st.final_slope * (1.0 + 1e-9);
            if (std::isinf(mu.hi)) range.hi = kInf;
          }
          auto psegs = enumerate_p_segments(grid, {i, j}, range, options.vertex_tol);
          for (PSegment& ps : psegs) {
            SweepState nxt;
            nxt.value = st.value + ps.value;
            nxt.last_is_n = false;
            nxt.has_prev_p = true;
            nxt.p_end = ps.end_vertex;
            nxt.final_slope = ps.final_slope();
            nxt.pred_vertex = vid(i, j);
            nxt.pred_state = static_cast<int>(si);
            auto end = ps.end_vertex;
            nxt.via = PathSegment(std::move(ps));
            insert_state(end[0], end[1], std::move(nxt));
          }
        }
      }
    }
  }

  const auto& goal = states[vid(m, n)];
  if (goal.empty()) {
    throw std::runtime_error("optimal_match: no canonical path found");
  }
  int best = 0;
  for (std::size_t k = 1; k < goal.size(); ++k) {
    if (goal[k].value > goal[best].value) best = static_cast<int>(k);
  }

  MatchResult out;
  out.value = goal[best].value;

  // Reconstruct the path by walking predecessors.
  std::vector<PathSegment> rev;
  const SweepState* cur = &goal[best];
  while (cur->via.has_value()) {
    rev.push_back(*cur->via);
    cur = &states[cur->pred_vertex][cur->pred_state];
  }
  out.path.assign(rev.rbegin(), rev.rend());

  auto [g1, g2] = extract_reparams(out.path);
  out.gamma1 = std::move(g1);
  out.gamma2 = std::move(g2);

  double n1 = inner(q1, q1), n2 = inner(q2, q2);
  out.distance = std::sqrt(std::max(0.0, n1 + n2 - 2.0 * out.value));
  return out;
}

std::pair<PlReparam, PlReparam> extract_reparams(
    const std::vector<PathSegment>& path) {
  if (path.empty()) return {PlReparam::identity(), PlReparam::identity()};
  std::vector<std::array<double, 2>> pts;
  pts.push_back({0.0, 0.0});
  for (const PathSegment& seg : path) {
    auto append = [&](const std::array<double, 2>& p) {
      if (p[0] + p[1] > pts.back()[0] + pts.back()[1] + 1e-15) pts.push_back(p);
    };
    if (std::holds_alternative<PSegment>(seg)) {
      for (const auto& p : std::get<PSegment>(seg).points) append(p);
    } else {
      const auto& ns = std::get<NSegment>(seg);
      append(ns.corner);
      append(ns.end);
    }
  }
  pts.back() = {1.0, 1.0};

  std::vector<double> z(pts.size()), g1(pts.size()), g2(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    z[k] = 0.5 * (pts[k][0] + pts[k][1]);
    g1[k] = pts[k][0];
    g2[k] = pts[k][1];
  }
  z.front() = 0.0;
  z.back() = 1.0;
  g1.front() = g2.front() = 0.0;
  g1.back() = g2.back() = 1.0;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    g1[k] = std::max(g1[k], g1[k - 1]);
    g2[k] = std::max(g2[k], g2[k - 1]);
  }
  return {PlReparam(z, g1), PlReparam(z, g2)};
}

}  // namespace srvf
