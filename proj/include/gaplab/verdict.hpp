#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gaplab {

// One checked inequality. Lower bounds store slack = lhs - rhs; upper-bound
// checks store slack = rhs - lhs, so holds <=> slack >= -tol uniformly.
struct Verdict {
  std::string name;
  std::string anchor;  // where the claim lives in the source text
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = 1e-9;
  bool holds = false;
  bool skipped = false;
  std::string reason;  // set when skipped
  std::vector<std::string> dependencies;

  bool failed() const { return !skipped && !holds; }
};

// lhs >= rhs within tol
Verdict lower_bound_verdict(std::string name, std::string anchor, double lhs,
                            double rhs, double tol = 1e-9);

// lhs <= rhs within tol
Verdict upper_bound_verdict(std::string name, std::string anchor, double lhs,
                            double rhs, double tol = 1e-9);

Verdict skipped_verdict(std::string name, std::string anchor,
                        std::string reason);

nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace gaplab
