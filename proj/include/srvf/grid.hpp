#pragma once

#include <cstddef>
#include <vector>

#include "srvf/curves.hpp"

namespace srvf {

/// Matching grid for a pair of step functions. The first index runs over
/// q1's pieces (the s/horizontal axis), the second over q2's pieces (the
/// t/vertical axis); indices are 0-based here, so weight(i, j) is the dot
/// product u_{i+1}.v_{j+1} in the 1-based convention and block (i, j) is
/// the rectangle [s_i, s_{i+1}] x [t_j, t_{j+1}].
class WeightGrid {
 public:
  WeightGrid(std::vector<double> s_breaks, std::vector<double> t_breaks,
             std::vector<Point> u, std::vector<Point> v);

  std::size_t m() const { return u_.size(); }
  std::size_t n() const { return v_.size(); }
  const std::vector<double>& s_breaks() const { return s_breaks_; }
  const std::vector<double>& t_breaks() const { return t_breaks_; }
  const std::vector<Point>& u() const { return u_; }
  const std::vector<Point>& v() const { return v_; }

  double weight(std::size_t i, std::size_t j) const { return w_[i * n() + j]; }
  double block_width(std::size_t i) const { return s_breaks_[i + 1] - s_breaks_[i]; }
  double block_height(std::size_t j) const { return t_breaks_[j + 1] - t_breaks_[j]; }

  /// True when every weight in the inclusive block-index rectangle
  /// [i_lo, i_hi] x [j_lo, j_hi] is <= 0; ranges are clipped to the grid
  /// and an empty range counts as true.
  bool all_nonpositive(long i_lo, long i_hi, long j_lo, long j_hi) const;

 private:
  std::vector<double> s_breaks_;
  std::vector<double> t_breaks_;
  std::vector<Point> u_;
  std::vector<Point> v_;
  std::vector<double> w_;
  std::vector<int> pos_prefix_;  // count of positive weights in [0,i) x [0,j)

  int pos_count(std::size_t i, std::size_t j) const {
    return pos_prefix_[i * (n() + 1) + j];
  }
};

/// Builds the grid from two step functions with nowhere-zero pieces.
WeightGrid build_grid(const StepSrvf& q1, const StepSrvf& q2);

/// Inner-product contribution of a linear diagonal traversal of a
/// ds x dt sub-rectangle with weight w.
inline double rect_value(double w, double ds, double dt) {
  return w * std::sqrt(ds) * std::sqrt(dt);
}

}  // namespace srvf
