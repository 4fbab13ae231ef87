#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace torusdual::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::expected_fail: return "expected-fail";
  }
  return "fail";
}

int exit_code(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (r.status == Status::fail) return 1;
  return 0;
}

void sort_results(std::vector<SuiteResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const SuiteResult& a, const SuiteResult& b) {
    return std::tie(a.fixture, a.suite) < std::tie(b.fixture, b.suite);
  });
}

Json report_header(const std::string& command) {
  return {{"schema_version", report_schema_version},
          {"tool", {{"name", "torusdual"}, {"version", TORUSDUAL_VERSION}}},
          {"command", command}};
}

Json verify_report(std::vector<SuiteResult> results, const ReportOptions& options) {
  sort_results(results);
  Json j = report_header("verify");
  Json list = Json::array();
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"skipped", 0}, {"expected-fail", 0}};
  for (const auto& r : results) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json cj = {{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(std::move(cj));
    }
    Json facts = Json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    Json rj = {{"fixture", r.fixture}, {"suite", r.suite}, {"status", to_string(r.status)},
               {"checks", checks}, {"facts", facts}};
    if (!r.detail.empty()) rj["detail"] = r.detail;
    // Millisecond resolution keeps the field readable; --no-timing drops it entirely.
    if (options.timing) rj["elapsed_ms"] = std::round(r.elapsed_ms * 1000.0) / 1000.0;
    list.push_back(std::move(rj));
    ++counts[to_string(r.status)];
  }
  j["results"] = list;
  j["summary"] = {{"total", results.size()},        {"pass", counts["pass"]},
                  {"fail", counts["fail"]},         {"skipped", counts["skipped"]},
                  {"expected_fail", counts["expected-fail"]}};
  j["exit_code"] = exit_code(results);
  return j;
}

std::string render_text(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << r.fixture << " " << r.suite << ": " << to_string(r.status);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
    for (const auto& [k, v] : r.facts) out << "    " << k << " = " << v << '\n';
    for (const auto& c : r.checks) {
      out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace torusdual::cli
