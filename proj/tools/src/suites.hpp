#pragma once

#include "report.hpp"

#include "torusdual/fixtures.hpp"

#include <string>
#include <vector>

namespace torusdual::cli {

/// Individual suite names in execution order; "all" expands to these.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one named suite. Library exceptions become a failed result carrying the message.
SuiteResult run_suite(const TorusFixture& fix, const std::string& suite);
/// Expands "all" and runs each suite.
std::vector<SuiteResult> run_suites(const TorusFixture& fix, const std::string& suite);

}  // namespace torusdual::cli
