#pragma once

#include <string>
#include <vector>

#include "srvf/curves.hpp"
#include "srvf/exact_match.hpp"

namespace srvf {

/// Unit square with blocks shaded by weight sign and the matching path
/// drawn on top (P-segments solid, N-segments dashed).
std::string svg_grid_path(const std::vector<double>& s_breaks,
                          const std::vector<double>& t_breaks,
                          const std::vector<std::vector<double>>& weights,
                          const std::vector<PathSegment>& path);

/// Overlaid curves with a shared coordinate frame. 1D curves are drawn as
/// graphs over t; 3D curves with a simple oblique projection.
struct CurvePlot {
  const PlCurve* curve;
  std::string color;
  double opacity = 1.0;
};
std::string svg_curves(const std::vector<CurvePlot>& curves);

}  // namespace srvf
