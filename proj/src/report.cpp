#include "k3lat/report.hpp"

#include <sstream>

namespace k3lat {

using nlohmann::ordered_json;

nlohmann::ordered_json js_int(const Int& x) { return ordered_json(x.str()); }

nlohmann::ordered_json js_vec(const IntVec& v) {
  ordered_json out = ordered_json::array();
  for (const Int& x : v) out.push_back(x.str());
  return out;
}

nlohmann::ordered_json js_matrix(const IntMatrix& m) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::ordered_json js_poly(const IntPolynomial& p) {
  ordered_json out = ordered_json::object();
  out["text"] = p.str();
  out["coefficients"] = js_vec(p.coeffs());  // lowest degree first
  return out;
}

namespace {

ordered_json summary_of(const Report& report) {
  size_t pass = 0, fail = 0, inconclusive = 0;
  for (const CheckResult& c : report.checks) {
    if (c.status == "pass")
      ++pass;
    else if (c.status == "fail")
      ++fail;
    else
      ++inconclusive;
  }
  ordered_json s = ordered_json::object();
  s["pass"] = pass;
  s["fail"] = fail;
  s["inconclusive"] = inconclusive;
  s["skipped"] = report.skipped.size();
  return s;
}

}  // namespace

nlohmann::ordered_json to_json(const Report& report) {
  ordered_json out = ordered_json::object();
  out["schema"] = 1;
  out["command"] = report.command;
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json j = ordered_json::object();
    j["id"] = c.id;
    j["description"] = c.description;
    j["status"] = c.status;
    j["data"] = c.data;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  ordered_json skipped = ordered_json::array();
  for (const SkippedCheck& s : report.skipped) {
    ordered_json j = ordered_json::object();
    j["id"] = s.id;
    j["reason"] = s.reason;
    skipped.push_back(std::move(j));
  }
  out["skipped"] = std::move(skipped);
  out["data"] = report.data;
  out["summary"] = summary_of(report);
  return out;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  for (const CheckResult& c : report.checks) {
    std::string tag = c.status == "pass"           ? "PASS"
                      : c.status == "fail"         ? "FAIL"
                      : c.status == "inconclusive" ? "INCONCLUSIVE"
                                                   : c.status;
    out << "[" << tag << "] " << c.id << ": " << c.description << "\n";
    if (c.status != "pass" && !c.data.is_null() && !c.data.empty())
      out << "        data: " << c.data.dump() << "\n";
  }
  for (const SkippedCheck& s : report.skipped)
    out << "[SKIP] " << s.id << ": " << s.reason << "\n";
  if (!report.data.empty()) out << report.data.dump(2) << "\n";
  if (!report.checks.empty() || !report.skipped.empty()) {
    ordered_json s = summary_of(report);
    out << "summary: " << s["pass"] << " passed, " << s["fail"] << " failed, "
        << s["inconclusive"] << " inconclusive, " << s["skipped"]
        << " skipped\n";
  }
  return out.str();
}

int exit_code(const Report& report) {
  bool inconclusive = false;
  for (const CheckResult& c : report.checks) {
    if (c.status == "fail") return 1;
    if (c.status == "inconclusive") inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

}  // namespace k3lat
