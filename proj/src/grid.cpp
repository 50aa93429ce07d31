#include "srvf/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace srvf {

WeightGrid::WeightGrid(std::vector<double> s_breaks, std::vector<double> t_breaks,
                       std::vector<Point> u, std::vector<Point> v)
    : s_breaks_(std::move(s_breaks)),
      t_breaks_(std::move(t_breaks)),
      u_(std::move(u)),
      v_(std::move(v)) {
  if (s_breaks_.size() != u_.size() + 1 || t_breaks_.size() != v_.size() + 1) {
    throw std::invalid_argument("WeightGrid: breaks/pieces size mismatch");
  }
  w_.resize(m() * n());
  for (std::size_t i = 0; i < m(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      w_[i * n() + j] = dot(u_[i], v_[j]);
    }
  }
  pos_prefix_.assign((m() + 1) * (n() + 1), 0);
  for (std::size_t i = 0; i < m(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      pos_prefix_[(i + 1) * (n() + 1) + (j + 1)] =
          pos_prefix_[i * (n() + 1) + (j + 1)] +
          pos_prefix_[(i + 1) * (n() + 1) + j] - pos_prefix_[i * (n() + 1) + j] +
          (weight(i, j) > 0.0 ? 1 : 0);
    }
  }
}

bool WeightGrid::all_nonpositive(long i_lo, long i_hi, long j_lo, long j_hi) const {
  i_lo = std::max(i_lo, 0L);
  j_lo = std::max(j_lo, 0L);
  i_hi = std::min(i_hi, static_cast<long>(m()) - 1);
  j_hi = std::min(j_hi, static_cast<long>(n()) - 1);
  if (i_lo > i_hi || j_lo > j_hi) return true;
  int positives = pos_count(i_hi + 1, j_hi + 1) - pos_count(i_lo, j_hi + 1) -
                  pos_count(i_hi + 1, j_lo) + pos_count(i_lo, j_lo);
  return positives == 0;
}

WeightGrid build_grid(const StepSrvf& q1, const StepSrvf& q2) {
  if (q1.dim() != q2.dim()) {
    throw std::invalid_argument("build_grid: dimension mismatch");
  }
  if (q1.has_zero_piece() || q2.has_zero_piece()) {
    throw std::invalid_argument("build_grid: flat piece not allowed");
  }
  return WeightGrid(q1.breakpoints(), q2.breakpoints(), q1.pieces(), q2.pieces());
}

}  // namespace srvf
