#include "gaplab/verdict.hpp"

#include <cstdio>

namespace gaplab {

Verdict lower_bound_verdict(std::string name, std::string anchor, double lhs,
                            double rhs, double tol) {
  Verdict v;
  v.name = std::move(name);
  v.anchor = std::move(anchor);
  v.lhs = lhs;
  v.rhs = rhs;
  v.tol = tol;
  v.slack = lhs - rhs;
  v.holds = v.slack >= -tol;
  return v;
}

Verdict upper_bound_verdict(std::string name, std::string anchor, double lhs,
                            double rhs, double tol) {
  Verdict v;
  v.name = std::move(name);
  v.anchor = std::move(anchor);
  v.lhs = lhs;
  v.rhs = rhs;
  v.tol = tol;
  v.slack = rhs - lhs;
  v.holds = v.slack >= -tol;
  return v;
}

Verdict skipped_verdict(std::string name, std::string anchor,
                        std::string reason) {
  Verdict v;
  v.name = std::move(name);
  v.anchor = std::move(anchor);
  v.skipped = true;
  v.reason = std::move(reason);
  return v;
}

namespace {

std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  return buf;
}

}  // namespace

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["name"] = v.name;
  j["anchor"] = v.anchor;
  if (v.skipped) {
    j["status"] = "skipped";
    j["reason"] = v.reason;
  } else {
    j["status"] = v.holds ? "holds" : "failed";
    j["lhs"] = fixed12(v.lhs);
    j["rhs"] = fixed12(v.rhs);
    j["slack"] = fixed12(v.slack);
    j["tol"] = v.tol;
  }
  if (!v.dependencies.empty()) j["dependencies"] = v.dependencies;
  return j;
}

}  // namespace gaplab
