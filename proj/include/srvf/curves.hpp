#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace srvf {

/// Tolerance for deciding that two parameter values name the same knot.
inline constexpr double kKnotTol = 1e-12;

using Point = std::vector<double>;

inline double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_sq(const Point& a) { return dot(a, a); }

inline double norm(const Point& a) { return std::sqrt(norm_sq(a)); }

/// Continuous piecewise-linear function [0,1] -> R^N, stored as breakpoints
/// t_0=0 < ... < t_m=1 with one value per breakpoint and linear
/// interpolation in between.
class PlCurve {
 public:
  PlCurve(std::size_t dim, std::vector<double> breakpoints,
          std::vector<Point> values);

  std::size_t dim() const { return dim_; }
  std::size_t num_pieces() const { return breakpoints_.size() - 1; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Point>& values() const { return values_; }

  Point eval(double t) const;

 private:
  std::size_t dim_;
  std::vector<double> breakpoints_;
  std::vector<Point> values_;
};

/// Step function [0,1] -> R^N: interval partition plus one constant vector
/// per open interval. This is the shape of the SRVF of a PL curve. Zero
/// pieces are representable (they arise from acting by a flat
/// reparametrization) but `srvf` never produces them.
class StepSrvf {
 public:
  StepSrvf(std::size_t dim, std::vector<double> breakpoints,
           std::vector<Point> pieces);

  std::size_t dim() const { return dim_; }
  std::size_t num_pieces() const { return pieces_.size(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Point>& pieces() const { return pieces_; }
  const Point& piece(std::size_t i) const { return pieces_[i]; }
  double piece_len(std::size_t i) const {
    return breakpoints_[i + 1] - breakpoints_[i];
  }

  bool has_zero_piece() const;

  /// Value on the open interval containing t (at a breakpoint, the piece to
  /// the right; at t=1, the last piece).
  const Point& eval(double t) const;

 private:
  std::size_t dim_;
  std::vector<double> breakpoints_;
  std::vector<Point> pieces_;
};

/// Piecewise-linear weakly increasing map [0,1] -> [0,1] fixing the
/// endpoints: an element of the reparametrization semigroup, and of the
/// group when strictly increasing.
class PlReparam {
 public:
  PlReparam(std::vector<double> z, std::vector<double> g);

  static PlReparam identity();

  std::size_t num_knots() const { return z_.size(); }
  const std::vector<double>& z() const { return z_; }
  const std::vector<double>& g() const { return g_; }
  bool is_strict() const { return strict_; }

  double eval(double z) const;

  /// Inverse map; only defined for strictly increasing reparametrizations.
  PlReparam inverse() const;

 private:
  std::vector<double> z_;
  std::vector<double> g_;
  bool strict_;
};

/// Square-root velocity transform. Flat pieces (zero slope) are excised and
/// the remaining domain rescaled uniformly, which stays within the same
/// closed orbit. Adjacent equal pieces are not merged. Throws if the curve
/// is constant.
StepSrvf srvf(const PlCurve& f);

/// Inverse transform: the origin-anchored curve with slope q|q| on each
/// piece.
PlCurve inverse_srvf(const StepSrvf& q);

double arc_length(const PlCurve& f);

/// Scales values so the arc length becomes 1. Throws on zero-length curves.
PlCurve normalize_to_unit_length(const PlCurve& f);

/// Constant-speed standardization: returns the reparametrized curve with
/// |slope| equal on every piece, and the reparametrization gamma with
/// f(gamma(z)) equal to the returned curve at its knots.
std::pair<PlCurve, PlReparam> constant_speed(const PlCurve& f);

/// f composed with gamma, exact on the refined knot set.
PlCurve apply_reparam(const PlCurve& f, const PlReparam& gamma);

/// a composed with b (a after b), exact.
PlReparam compose_reparam(const PlReparam& a, const PlReparam& b);

}  // namespace srvf
