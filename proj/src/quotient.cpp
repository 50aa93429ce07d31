#include "srvf/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srvf {

RefinedPair refine_pair(const StepSrvf& q1, const StepSrvf& q2) {
  if (q1.dim() != q2.dim()) {
    throw std::invalid_argument("refine_pair: dimension mismatch");
  }
  std::vector<double> breaks = q1.breakpoints();
  breaks.insert(breaks.end(), q2.breakpoints().begin(), q2.breakpoints().end());
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> merged;
  for (double t : breaks) {
    if (merged.empty() || t - merged.back() > kKnotTol) merged.push_back(t);
  }
  merged.front() = 0.0;
  merged.back() = 1.0;

  RefinedPair out;
  out.breaks = merged;
  out.a.reserve(merged.size() - 1);
  out.b.reserve(merged.size() - 1);
  for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
    double mid = 0.5 * (merged[k] + merged[k + 1]);
    out.a.push_back(q1.eval(mid));
    out.b.push_back(q2.eval(mid));
  }
  return out;
}

double inner(const StepSrvf& q1, const StepSrvf& q2) {
  RefinedPair rp = refine_pair(q1, q2);
  double sum = 0.0;
  for (std::size_t k = 0; k < rp.a.size(); ++k) {
    sum += dot(rp.a[k], rp.b[k]) * (rp.breaks[k + 1] - rp.breaks[k]);
  }
  return sum;
}

double l2_distance(const StepSrvf& q1, const StepSrvf& q2) {
  double d2 = inner(q1, q1) + inner(q2, q2) - 2.0 * inner(q1, q2);
  return std::sqrt(std::max(0.0, d2));
}

StepSrvf group_action(const StepSrvf& q, const PlReparam& gamma) {
  const auto& z = gamma.z();
  const auto& g = gamma.g();

  // Refined knots: gamma's knots plus preimages of q's breakpoints.
  std::vector<double> knots = z;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    double g0 = g[i], g1 = g[i + 1];
    if (g1 <= g0) continue;
    for (double b : q.breakpoints()) {
      if (b > g0 + kKnotTol && b < g1 - kKnotTol) {
        knots.push_back(z[i] + (b - g0) * (z[i + 1] - z[i]) / (g1 - g0));
      }
    }
  }
  std::sort(knots.begin(), knots.end());
  std::vector<double> merged;
  for (double t : knots) {
    if (merged.empty() || t - merged.back() > kKnotTol) merged.push_back(t);
  }
  merged.front() = 0.0;
  merged.back() = 1.0;

  std::vector<Point> pieces;
  pieces.reserve(merged.size() - 1);
  for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
    double mid = 0.5 * (merged[k] + merged[k + 1]);
    double lo = gamma.eval(merged[k]);
    double hi = gamma.eval(merged[k + 1]);
    double slope = (hi - lo) / (merged[k + 1] - merged[k]);
    Point p(q.dim(), 0.0);
    if (slope > 0.0) {
      const Point& base = q.eval(gamma.eval(mid));
      double root = std::sqrt(slope);
      for (std::size_t d = 0; d < q.dim(); ++d) p[d] = base[d] * root;
    }
    pieces.push_back(std::move(p));
  }
  return StepSrvf(q.dim(), std::move(merged), std::move(pieces));
}

namespace {

double norm_l2(const StepSrvf& q) { return std::sqrt(inner(q, q)); }

}  // namespace

double sphere_distance(const StepSrvf& q1, const StepSrvf& q2) {
  if (std::fabs(norm_l2(q1) - 1.0) > 1e-9 || std::fabs(norm_l2(q2) - 1.0) > 1e-9) {
    throw std::invalid_argument("sphere_distance: inputs must have unit norm");
  }
  double c = std::clamp(inner(q1, q2), -1.0, 1.0);
  return std::acos(c);
}

StepSrvf geodesic_l2(const StepSrvf& q1, const StepSrvf& q2, double tau) {
  RefinedPair rp = refine_pair(q1, q2);
  std::vector<Point> pieces(rp.a.size());
  for (std::size_t k = 0; k < rp.a.size(); ++k) {
    Point p(q1.dim());
    for (std::size_t d = 0; d < q1.dim(); ++d) {
      p[d] = (1.0 - tau) * rp.a[k][d] + tau * rp.b[k][d];
    }
    pieces[k] = std::move(p);
  }
  return StepSrvf(q1.dim(), rp.breaks, std::move(pieces));
}

StepSrvf geodesic_sphere(const StepSrvf& q1, const StepSrvf& q2, double tau) {
  if (std::fabs(norm_l2(q1) - 1.0) > 1e-9 || std::fabs(norm_l2(q2) - 1.0) > 1e-9) {
    throw std::invalid_argument("geodesic_sphere: inputs must have unit norm");
  }
  double c = std::clamp(inner(q1, q2), -1.0, 1.0);
  if (c <= -1.0 + 1e-12) {
    throw std::invalid_argument("geodesic_sphere: antipodal pair has no unique geodesic");
  }
  double theta = std::acos(c);
  RefinedPair rp = refine_pair(q1, q2);
  double wa, wb;
  if (theta < 1e-12) {
    wa = 1.0 - tau;
    wb = tau;
  } else {
    double s = std::sin(theta);
    wa = std::sin((1.0 - tau) * theta) / s;
    wb = std::sin(tau * theta) / s;
  }
  std::vector<Point> pieces(rp.a.size());
  for (std::size_t k = 0; k < rp.a.size(); ++k) {
    Point p(q1.dim());
    for (std::size_t d = 0; d < q1.dim(); ++d) {
      p[d] = wa * rp.a[k][d] + wb * rp.b[k][d];
    }
    pieces[k] = std::move(p);
  }
  return StepSrvf(q1.dim(), rp.breaks, std::move(pieces));
}

ConstantMatch constant_match_value(const StepSrvf& q, const Point& w0,
                                   double interval_len) {
  if (w0.size() != q.dim()) {
    throw std::invalid_argument("constant_match_value: dimension mismatch");
  }
  if (interval_len < 0.0) {
    throw std::invalid_argument("constant_match_value: negative interval length");
  }

  double mass = 0.0;  // integral of (q.w0)^2 over the set where q.w0 > 0
  std::vector<double> density(q.num_pieces(), 0.0);
  for (std::size_t i = 0; i < q.num_pieces(); ++i) {
    double d = dot(q.piece(i), w0);
    if (d > 0.0) {
      density[i] = d * d;
      mass += d * d * q.piece_len(i);
    }
  }

  ConstantMatch out;
  if (mass <= 0.0) {
    out.value = 0.0;
    return out;
  }
  out.value = std::sqrt(mass) * std::sqrt(interval_len);

  // gamma_w(t) = integral of F, with F the normalized positive-part density.
  std::vector<double> z = q.breakpoints();
  std::vector<double> g(z.size(), 0.0);
  for (std::size_t i = 0; i < q.num_pieces(); ++i) {
    g[i + 1] = g[i] + density[i] * q.piece_len(i) / mass;
  }
  g.back() = 1.0;
  for (std::size_t i = 1; i < g.size(); ++i) g[i] = std::min(1.0, std::max(g[i], g[i - 1]));
  out.gamma_w = PlReparam(std::move(z), std::move(g));
  out.gamma_q = PlReparam::identity();
  return out;
}

}  // namespace srvf
