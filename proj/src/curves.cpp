#include "srvf/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace srvf {

namespace {

void check_partition(const std::vector<double>& breaks, const char* what) {
  if (breaks.size() < 2) {
    throw std::invalid_argument(std::string(what) + ": need at least two breakpoints");
  }
  if (breaks.front() != 0.0 || breaks.back() != 1.0) {
    throw std::invalid_argument(std::string(what) + ": breakpoints must run from 0 to 1");
  }
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (!(breaks[i] > breaks[i - 1])) {
      throw std::invalid_argument(std::string(what) + ": breakpoints must be strictly increasing");
    }
  }
  for (double t : breaks) {
    if (!std::isfinite(t)) {
      throw std::invalid_argument(std::string(what) + ": non-finite breakpoint");
    }
  }
}

// Index of the piece [breaks[i], breaks[i+1]) containing t, clamped.
std::size_t piece_index(const std::vector<double>& breaks, double t) {
  auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
  std::size_t i = static_cast<std::size_t>(it - breaks.begin());
  if (i == 0) return 0;
  if (i >= breaks.size()) return breaks.size() - 2;
  return i - 1;
}

}  // namespace

PlCurve::PlCurve(std::size_t dim, std::vector<double> breakpoints,
                 std::vector<Point> values)
    : dim_(dim), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (dim_ == 0) throw std::invalid_argument("PlCurve: dim must be positive");
  check_partition(breakpoints_, "PlCurve");
  if (values_.size() != breakpoints_.size()) {
    throw std::invalid_argument("PlCurve: values count must equal breakpoints count");
  }
  for (const Point& p : values_) {
    if (p.size() != dim_) throw std::invalid_argument("PlCurve: value dimension mismatch");
    for (double x : p) {
      if (!std::isfinite(x)) throw std::invalid_argument("PlCurve: non-finite coordinate");
    }
  }
}

Point PlCurve::eval(double t) const {
  std::size_t i = piece_index(breakpoints_, t);
  double t0 = breakpoints_[i], t1 = breakpoints_[i + 1];
  double w = (t - t0) / (t1 - t0);
  Point out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    out[k] = values_[i][k] + w * (values_[i + 1][k] - values_[i][k]);
  }
  return out;
}

StepSrvf::StepSrvf(std::size_t dim, std::vector<double> breakpoints,
                   std::vector<Point> pieces)
    : dim_(dim), breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (dim_ == 0) throw std::invalid_argument("StepSrvf: dim must be positive");
  check_partition(breakpoints_, "StepSrvf");
  if (pieces_.size() + 1 != breakpoints_.size()) {
    throw std::invalid_argument("StepSrvf: need one piece per interval");
  }
  for (const Point& p : pieces_) {
    if (p.size() != dim_) throw std::invalid_argument("StepSrvf: piece dimension mismatch");
    for (double x : p) {
      if (!std::isfinite(x)) throw std::invalid_argument("StepSrvf: non-finite piece");
    }
  }
}

bool StepSrvf::has_zero_piece() const {
  for (const Point& p : pieces_) {
    if (norm_sq(p) == 0.0) return true;
  }
  return false;
}

const Point& StepSrvf::eval(double t) const {
  return pieces_[piece_index(breakpoints_, t)];
}

PlReparam::PlReparam(std::vector<double> z, std::vector<double> g)
    : z_(std::move(z)), g_(std::move(g)) {
  if (z_.size() != g_.size() || z_.size() < 2) {
    throw std::invalid_argument("PlReparam: need matching z/g knot lists");
  }
  if (z_.front() != 0.0 || z_.back() != 1.0 || g_.front() != 0.0 || g_.back() != 1.0) {
    throw std::invalid_argument("PlReparam: knots must map 0->0 and 1->1");
  }
  strict_ = true;
  for (std::size_t i = 1; i < z_.size(); ++i) {
    if (!(z_[i] > z_[i - 1])) {
      throw std::invalid_argument("PlReparam: z knots must be strictly increasing");
    }
    if (g_[i] < g_[i - 1]) {
      throw std::invalid_argument("PlReparam: g knots must be weakly increasing");
    }
    if (g_[i] == g_[i - 1]) strict_ = false;
  }
}

PlReparam PlReparam::identity() { return PlReparam({0.0, 1.0}, {0.0, 1.0}); }

double PlReparam::eval(double z) const {
  std::size_t i = piece_index(z_, z);
  double z0 = z_[i], z1 = z_[i + 1];
  double w = (z - z0) / (z1 - z0);
  return g_[i] + w * (g_[i + 1] - g_[i]);
}

PlReparam PlReparam::inverse() const {
  if (!strict_) {
    throw std::invalid_argument("PlReparam::inverse: map is not strictly increasing");
  }
  return PlReparam(g_, z_);
}

StepSrvf srvf(const PlCurve& f) {
  const auto& breaks = f.breakpoints();
  const auto& vals = f.values();
  std::size_t dim = f.dim();

  // Keep only pieces with nonzero displacement.
  std::vector<double> lens;
  std::vector<Point> slopes;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double len = breaks[i + 1] - breaks[i];
    Point d(dim);
    bool flat = true;
    for (std::size_t k = 0; k < dim; ++k) {
      d[k] = vals[i + 1][k] - vals[i][k];
      if (d[k] != 0.0) flat = false;
    }
    if (flat) continue;
    lens.push_back(len);
    slopes.push_back(std::move(d));  // displacement for now; divided below
  }
  if (lens.empty()) throw std::invalid_argument("srvf: degenerate curve");

  double total = 0.0;
  for (double l : lens) total += l;

  std::vector<double> out_breaks(lens.size() + 1);
  out_breaks[0] = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < lens.size(); ++i) {
    acc += lens[i];
    out_breaks[i + 1] = acc / total;
  }
  out_breaks.back() = 1.0;

  std::vector<Point> pieces(slopes.size());
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    double len = out_breaks[i + 1] - out_breaks[i];
    Point slope(dim);
    for (std::size_t k = 0; k < dim; ++k) slope[k] = slopes[i][k] / len;
    double mag = norm(slope);
    Point q(dim);
    double scale = 1.0 / std::sqrt(mag);
    for (std::size_t k = 0; k < dim; ++k) q[k] = slope[k] * scale;
    pieces[i] = std::move(q);
  }
  return StepSrvf(dim, std::move(out_breaks), std::move(pieces));
}

PlCurve inverse_srvf(const StepSrvf& q) {
  std::size_t dim = q.dim();
  std::vector<Point> vals(q.num_pieces() + 1, Point(dim, 0.0));
  for (std::size_t i = 0; i < q.num_pieces(); ++i) {
    double len = q.piece_len(i);
    double mag = norm(q.piece(i));
    for (std::size_t k = 0; k < dim; ++k) {
      vals[i + 1][k] = vals[i][k] + q.piece(i)[k] * mag * len;
    }
  }
  return PlCurve(dim, q.breakpoints(), std::move(vals));
}

double arc_length(const PlCurve& f) {
  double total = 0.0;
  const auto& vals = f.values();
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    double seg = 0.0;
    for (std::size_t k = 0; k < f.dim(); ++k) {
      double d = vals[i + 1][k] - vals[i][k];
      seg += d * d;
    }
    total += std::sqrt(seg);
  }
  return total;
}

PlCurve normalize_to_unit_length(const PlCurve& f) {
  double len = arc_length(f);
  if (len == 0.0) throw std::invalid_argument("normalize_to_unit_length: zero-length curve");
  std::vector<Point> vals = f.values();
  for (Point& p : vals) {
    for (double& x : p) x /= len;
  }
  return PlCurve(f.dim(), f.breakpoints(), std::move(vals));
}

std::pair<PlCurve, PlReparam> constant_speed(const PlCurve& f) {
  const auto& breaks = f.breakpoints();
  const auto& vals = f.values();
  double total = arc_length(f);
  if (total == 0.0) throw std::invalid_argument("constant_speed: zero-length curve");

  // Cumulative arc-length fractions; flat pieces collapse to a repeated
  // knot, which we skip (keeping the later t so the gamma knots stay valid).
  std::vector<double> z{0.0};
  std::vector<double> g{0.0};
  std::vector<Point> cvals{vals[0]};
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double seg = 0.0;
    for (std::size_t k = 0; k < f.dim(); ++k) {
      double d = vals[i + 1][k] - vals[i][k];
      seg += d * d;
    }
    acc += std::sqrt(seg);
    double zi = acc / total;
    if (i + 2 == breaks.size()) zi = 1.0;
    if (zi - z.back() <= kKnotTol) {
      // Flat piece: advance the gamma target without adding a knot. A flat
      // start keeps gamma(0)=0; the curve value is unchanged either way.
      if (z.back() > 0.0) g.back() = breaks[i + 1];
      cvals.back() = vals[i + 1];
      if (i + 2 == breaks.size()) z.back() = 1.0;
      continue;
    }
    z.push_back(zi);
    g.push_back(breaks[i + 1]);
    cvals.push_back(vals[i + 1]);
  }
  PlCurve curve(f.dim(), z, std::move(cvals));
  PlReparam gamma(std::move(z), std::move(g));
  return {std::move(curve), std::move(gamma)};
}

namespace {

// Merged knot set: b's knots plus preimages under b of the given levels.
std::vector<double> refine_against(const std::vector<double>& bz,
                                   const std::vector<double>& bg,
                                   const std::vector<double>& levels) {
  std::vector<double> out = bz;
  for (std::size_t i = 0; i + 1 < bz.size(); ++i) {
    double g0 = bg[i], g1 = bg[i + 1];
    if (g1 <= g0) continue;
    for (double w : levels) {
      if (w > g0 + kKnotTol && w < g1 - kKnotTol) {
        out.push_back(bz[i] + (w - g0) * (bz[i + 1] - bz[i]) / (g1 - g0));
      }
    }
  }
  std::sort(out.begin(), out.end());
  std::vector<double> dedup;
  for (double t : out) {
    if (dedup.empty() || t - dedup.back() > kKnotTol) dedup.push_back(t);
  }
  dedup.front() = 0.0;
  dedup.back() = 1.0;
  return dedup;
}

}  // namespace

PlCurve apply_reparam(const PlCurve& f, const PlReparam& gamma) {
  std::vector<double> knots = refine_against(gamma.z(), gamma.g(), f.breakpoints());
  std::vector<Point> vals;
  vals.reserve(knots.size());
  for (double z : knots) vals.push_back(f.eval(gamma.eval(z)));
  return PlCurve(f.dim(), std::move(knots), std::move(vals));
}

PlReparam compose_reparam(const PlReparam& a, const PlReparam& b) {
  std::vector<double> knots = refine_against(b.z(), b.g(), a.z());
  std::vector<double> g;
  g.reserve(knots.size());
  for (double z : knots) g.push_back(a.eval(b.eval(z)));
  g.front() = 0.0;
  g.back() = 1.0;
  for (std::size_t i = 1; i < g.size(); ++i) g[i] = std::max(g[i], g[i - 1]);
  return PlReparam(std::move(knots), std::move(g));
}

}  // namespace srvf
