#pragma once

#include <iosfwd>
#include <string>

#include "srvf/curves.hpp"
#include "srvf/exact_match.hpp"
#include "srvf/grid.hpp"

namespace srvf {

/// Formats a double with 12 significant digits, the convention for all JSON
/// emitted by this project.
std::string fmt12(double v);

/// Reads a curve from JSON ({"dim", "breakpoints", "values"}) or CSV (one
/// row per breakpoint: t, x1..xN). The format is chosen by file extension,
/// falling back to content sniffing.
PlCurve read_curve(const std::string& path);
PlCurve read_curve_json(std::istream& in);
PlCurve read_curve_csv(std::istream& in);

std::string curve_to_json(const PlCurve& f);

/// Serialization of a match: value, distance, gamma knots, path segments,
/// plus the grid (breaks and weight matrix) for plotting.
std::string match_to_json(const MatchResult& result, const WeightGrid& grid);

std::string grid_to_json(const WeightGrid& grid);

std::string reparam_to_json(const PlReparam& gamma);

/// Parses the output of match_to_json back into a result/grid pair (used by
/// the plot command).
struct ParsedMatch {
  MatchResult result;
  std::vector<double> s_breaks;
  std::vector<double> t_breaks;
  std::vector<std::vector<double>> weights;
};
ParsedMatch read_match_json(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace srvf
