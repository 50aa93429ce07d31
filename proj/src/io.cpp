#include "srvf/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace srvf {

using nlohmann::json;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::string join_doubles(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += fmt12(xs[i]);
  }
  out += "]";
  return out;
}

PlCurve curve_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("breakpoints") || !j.contains("values")) {
    throw std::runtime_error("curve JSON needs dim, breakpoints, values");
  }
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<double> breaks = j.at("breakpoints").get<std::vector<double>>();
  std::vector<Point> values;
  for (const auto& row : j.at("values")) {
    values.push_back(row.get<Point>());
  }
  return PlCurve(dim, std::move(breaks), std::move(values));
}

}  // namespace

PlCurve read_curve_json(std::istream& in) {
  json j = json::parse(in);
  return curve_from_json(j);
}

PlCurve read_curve_csv(std::istream& in) {
  std::vector<double> breaks;
  std::vector<Point> values;
  std::string line;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (char& c : line) {
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    }
    std::istringstream row(line);
    std::vector<double> nums;
    double x;
    while (row >> x) nums.push_back(x);
    if (nums.empty()) continue;  // header or stray text row
    if (nums.size() < 2) throw std::runtime_error("CSV row needs t plus coordinates");
    if (dim == 0) dim = nums.size() - 1;
    if (nums.size() - 1 != dim) throw std::runtime_error("CSV rows have mixed dimensions");
    breaks.push_back(nums[0]);
    values.emplace_back(nums.begin() + 1, nums.end());
  }
  if (breaks.size() >= 2) {
    if (std::fabs(breaks.front()) <= kKnotTol) breaks.front() = 0.0;
    if (std::fabs(breaks.back() - 1.0) <= kKnotTol) breaks.back() = 1.0;
  }
  return PlCurve(dim, std::move(breaks), std::move(values));
}

PlCurve read_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  bool looks_json = path.size() > 5 && path.substr(path.size() - 5) == ".json";
  if (!looks_json) {
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
      in.get();
      c = in.peek();
    }
    looks_json = (c == '{');
  }
  return looks_json ? read_curve_json(in) : read_curve_csv(in);
}

std::string curve_to_json(const PlCurve& f) {
  std::string out = "{\n  \"dim\": " + std::to_string(f.dim()) + ",\n";
  out += "  \"breakpoints\": " + join_doubles(f.breakpoints()) + ",\n";
  out += "  \"values\": [";
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (i) out += ",";
    out += join_doubles(f.values()[i]);
  }
  out += "]\n}\n";
  return out;
}

std::string reparam_to_json(const PlReparam& gamma) {
  std::string out = "{\"z\": " + join_doubles(gamma.z());
  out += ", \"g\": " + join_doubles(gamma.g()) + "}";
  return out;
}

namespace {

std::string segment_to_json(const PathSegment& seg) {
  std::string out = "{\"type\": \"";
  if (std::holds_alternative<PSegment>(seg)) {
    const auto& p = std::get<PSegment>(seg);
    out += "P\", \"value\": " + fmt12(p.value) + ", \"points\": [";
    for (std::size_t k = 0; k < p.points.size(); ++k) {
      if (k) out += ",";
      out += "[" + fmt12(p.points[k][0]) + "," + fmt12(p.points[k][1]) + "]";
    }
    out += "]}";
  } else {
    const auto& n = std::get<NSegment>(seg);
    out += "N\", \"value\": 0, \"points\": [";
    out += "[" + fmt12(n.start[0]) + "," + fmt12(n.start[1]) + "],";
    out += "[" + fmt12(n.corner[0]) + "," + fmt12(n.corner[1]) + "],";
    out += "[" + fmt12(n.end[0]) + "," + fmt12(n.end[1]) + "]]}";
  }
  return out;
}

}  // namespace

std::string grid_to_json(const WeightGrid& grid) {
  std::string out = "{\"s_breaks\": " + join_doubles(grid.s_breaks());
  out += ", \"t_breaks\": " + join_doubles(grid.t_breaks());
  out += ", \"W\": [";
  for (std::size_t i = 0; i < grid.m(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < grid.n(); ++j) {
      if (j) out += ",";
      out += fmt12(grid.weight(i, j));
    }
    out += "]";
  }
  out += "]}";
  return out;
}

std::string match_to_json(const MatchResult& result, const WeightGrid& grid) {
  std::string out = "{\n";
  out += "  \"value\": " + fmt12(result.value) + ",\n";
  out += "  \"distance\": " + fmt12(result.distance) + ",\n";
  out += "  \"gamma1\": " + reparam_to_json(result.gamma1) + ",\n";
  out += "  \"gamma2\": " + reparam_to_json(result.gamma2) + ",\n";
  out += "  \"path\": [";
  for (std::size_t k = 0; k < result.path.size(); ++k) {
    if (k) out += ",";
    out += "\n    " + segment_to_json(result.path[k]);
  }
  out += "\n  ],\n";
  out += "  \"grid\": " + grid_to_json(grid) + "\n}\n";
  return out;
}

ParsedMatch read_match_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j = json::parse(in);

  ParsedMatch out;
  out.result.value = j.at("value").get<double>();
  out.result.distance = j.at("distance").get<double>();
  auto load_gamma = [&](const char* key) {
    return PlReparam(j.at(key).at("z").get<std::vector<double>>(),
                     j.at(key).at("g").get<std::vector<double>>());
  };
  out.result.gamma1 = load_gamma("gamma1");
  out.result.gamma2 = load_gamma("gamma2");
  for (const auto& seg : j.at("path")) {
    std::string type = seg.at("type").get<std::string>();
    auto pts = seg.at("points").get<std::vector<std::array<double, 2>>>();
    if (type == "P") {
      PSegment p;
      p.points = std::move(pts);
      p.value = seg.at("value").get<double>();
      out.result.path.emplace_back(std::move(p));
    } else {
      NSegment n;
      if (pts.size() != 3) throw std::runtime_error("N segment needs 3 points");
      n.start = pts[0];
      n.corner = pts[1];
      n.end = pts[2];
      out.result.path.emplace_back(n);
    }
  }
  if (j.contains("grid")) {
    out.s_breaks = j.at("grid").at("s_breaks").get<std::vector<double>>();
    out.t_breaks = j.at("grid").at("t_breaks").get<std::vector<double>>();
    out.weights = j.at("grid").at("W").get<std::vector<std::vector<double>>>();
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace srvf
