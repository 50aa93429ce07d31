#include "srvf/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace srvf {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

constexpr double kSize = 560.0;
constexpr double kMargin = 20.0;

}  // namespace

std::string svg_grid_path(const std::vector<double>& s_breaks,
                          const std::vector<double>& t_breaks,
                          const std::vector<std::vector<double>>& weights,
                          const std::vector<PathSegment>& path) {
  auto px = [](double s) { return kMargin + s * kSize; };
  auto py = [](double t) { return kMargin + (1.0 - t) * kSize; };

  std::string out;
  double total = kSize + 2 * kMargin;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(total) +
         "\" height=\"" + num(total) + "\" viewBox=\"0 0 " + num(total) + " " +
         num(total) + "\">\n";

  for (std::size_t i = 0; i + 1 < s_breaks.size(); ++i) {
    for (std::size_t j = 0; j + 1 < t_breaks.size(); ++j) {
      double w = (i < weights.size() && j < weights[i].size()) ? weights[i][j] : 0.0;
      const char* fill = w > 0.0 ? "#e3efe3" : "#f3e3e3";
      out += "<rect x=\"" + num(px(s_breaks[i])) + "\" y=\"" +
             num(py(t_breaks[j + 1])) + "\" width=\"" +
             num((s_breaks[i + 1] - s_breaks[i]) * kSize) + "\" height=\"" +
             num((t_breaks[j + 1] - t_breaks[j]) * kSize) + "\" fill=\"" + fill +
             "\" stroke=\"#b8b8b8\" stroke-width=\"0.5\"/>\n";
    }
  }

  for (const PathSegment& seg : path) {
    std::vector<std::array<double, 2>> pts;
    const char* dash = "";
    if (std::holds_alternative<PSegment>(seg)) {
      pts = std::get<PSegment>(seg).points;
    } else {
      const auto& n = std::get<NSegment>(seg);
      pts = {n.start, n.corner, n.end};
      dash = " stroke-dasharray=\"6 3\"";
    }
    out += "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"";
    out += dash;
    out += " points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k) out += " ";
      out += num(px(pts[k][0])) + "," + num(py(pts[k][1]));
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string svg_curves(const std::vector<CurvePlot>& curves) {
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;

  auto project = [](const PlCurve& c, std::size_t i) -> std::array<double, 2> {
    const Point& p = c.values()[i];
    if (c.dim() == 1) return {c.breakpoints()[i], p[0]};
    if (c.dim() == 2) return {p[0], p[1]};
    return {p[0] + 0.35 * p[2], p[1] + 0.35 * p[2]};
  };

  for (const CurvePlot& cp : curves) {
    for (std::size_t i = 0; i < cp.curve->values().size(); ++i) {
      auto [x, y] = project(*cp.curve, i);
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y);
      hi_y = std::max(hi_y, y);
    }
  }
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  auto px = [&](double x) { return kMargin + (x - lo_x) / span * kSize; };
  auto py = [&](double y) { return kMargin + (1.0 - (y - lo_y) / span) * kSize; };

  double w = kMargin * 2 + (hi_x - lo_x) / span * kSize;
  double h = kMargin * 2 + kSize;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) +
                    "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " +
                    num(h) + "\">\n";
  for (const CurvePlot& cp : curves) {
    out += "<polyline fill=\"none\" stroke=\"" + cp.color +
           "\" stroke-opacity=\"" + num(cp.opacity) + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < cp.curve->values().size(); ++i) {
      auto [x, y] = project(*cp.curve, i);
      if (i) out += " ";
      out += num(px(x)) + "," + num(py(y));
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace srvf
