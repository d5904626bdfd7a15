#pragma once

#include "k3lat/matrix.hpp"
#include "k3lat/numeric.hpp"
#include "k3lat/polynomial.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace k3lat {

// One verification step.  `status` is "pass", "fail" or "inconclusive";
// `data` holds the exact values the verdict was computed from (all big
// integers serialized as decimal strings).
struct CheckResult {
  std::string id;
  std::string description;
  std::string status;
  nlohmann::ordered_json data;
};

// A check that was not executed because the config lacks the inputs for it.
struct SkippedCheck {
  std::string id;
  std::string reason;
};

// The result of one CLI command: an ordered list of checks plus a free-form
// data payload for informational commands.  Serializes to a stable JSON
// document (schema 1) whose key order never varies between runs.
struct Report {
  std::string command;
  std::vector<CheckResult> checks;
  std::vector<SkippedCheck> skipped;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const Report& report);

// human-readable rendering (one line per check, then a summary)
std::string render_text(const Report& report);

// 1 when any check failed, else 2 when any was inconclusive, else 0
int exit_code(const Report& report);

// serialization helpers: exact integers as decimal strings
nlohmann::ordered_json js_int(const Int& x);
nlohmann::ordered_json js_vec(const IntVec& v);
nlohmann::ordered_json js_matrix(const IntMatrix& m);
nlohmann::ordered_json js_poly(const IntPolynomial& p);

}  // namespace k3lat
