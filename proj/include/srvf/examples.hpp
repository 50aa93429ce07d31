#pragma once

#include <string>
#include <vector>

#include "srvf/curves.hpp"

namespace srvf {

/// Built-in closed-form demo pairs, sampled inclusively at t = k/K and
/// interpolated piecewise linearly.
struct ExamplePair {
  std::string id;
  PlCurve f1;
  PlCurve f2;
};

/// ids: ex4..ex9 (the closed-form demo set) and "quarter" (a synthetic
/// near-quarter-circle pair used by compare-dp).
ExamplePair make_example(const std::string& id);

std::vector<std::string> example_ids();

}  // namespace srvf
