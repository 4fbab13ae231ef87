#pragma once

#include "fixture_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusdual::cli {

enum class Status { pass, fail, skipped, expected_fail };

std::string to_string(Status s);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string fixture;
  std::string suite;
  Status status = Status::fail;
  std::vector<Check> checks;
  /// Why the suite failed, was skipped, or failed as expected.
  std::string detail;
  /// Canonical forms and other facts worth printing, in insertion order.
  std::vector<std::pair<std::string, std::string>> facts;
  double elapsed_ms = 0;
};

struct ReportOptions {
  bool timing = true;
};

/// 0 when nothing failed, 1 otherwise. Skips and expected failures do not count against the run.
int exit_code(const std::vector<SuiteResult>& results);

/// Versioned envelope shared by every JSON report.
Json report_header(const std::string& command);
Json verify_report(std::vector<SuiteResult> results, const ReportOptions& options);
std::string render_text(const std::vector<SuiteResult>& results);

/// Sorted by fixture then suite.
void sort_results(std::vector<SuiteResult>& results);

}  // namespace torusdual::cli
