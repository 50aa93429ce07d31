#pragma once

#include <random>
#include <vector>

#include "srvf/curves.hpp"

namespace srvf::testing {

inline PlCurve line_1d(std::vector<double> breaks, std::vector<double> vals) {
  std::vector<Point> pts;
  for (double v : vals) pts.push_back({v});
  return PlCurve(1, std::move(breaks), std::move(pts));
}

inline StepSrvf step_1d(std::vector<double> breaks, std::vector<double> vals) {
  std::vector<Point> pieces;
  for (double v : vals) pieces.push_back({v});
  return StepSrvf(1, std::move(breaks), std::move(pieces));
}

inline std::vector<double> random_partition(std::mt19937& rng, int pieces) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> cuts{0.0};
  double acc = 0.0;
  std::vector<double> lens(pieces);
  for (auto& l : lens) {
    l = u(rng);
    acc += l;
  }
  double run = 0.0;
  for (int i = 0; i + 1 < pieces; ++i) {
    run += lens[i];
    cuts.push_back(run / acc);
  }
  cuts.push_back(1.0);
  return cuts;
}

inline StepSrvf random_step(std::mt19937& rng, std::size_t dim, int pieces,
                            double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  auto breaks = random_partition(rng, pieces);
  std::vector<Point> ps;
  for (int i = 0; i < pieces; ++i) {
    Point p(dim);
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (auto& x : p) {
        x = u(rng);
        n2 += x * x;
      }
    } while (n2 < 1e-4);
    ps.push_back(p);
  }
  return StepSrvf(dim, std::move(breaks), std::move(ps));
}

inline PlCurve random_curve(std::mt19937& rng, std::size_t dim, int pieces) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto breaks = random_partition(rng, pieces);
  std::vector<Point> vals(pieces + 1, Point(dim, 0.0));
  for (int i = 1; i <= pieces; ++i) {
    Point step(dim);
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (auto& x : step) {
        x = u(rng);
        n2 += x * x;
      }
    } while (n2 < 1e-4);
    for (std::size_t k = 0; k < dim; ++k) vals[i][k] = vals[i - 1][k] + step[k];
  }
  return PlCurve(dim, std::move(breaks), std::move(vals));
}

inline PlReparam random_strict_reparam(std::mt19937& rng, int pieces) {
  auto z = random_partition(rng, pieces);
  auto g = random_partition(rng, pieces);
  return PlReparam(std::move(z), std::move(g));
}

}  // namespace srvf::testing
