#pragma once

#include "report.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusdual::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::ostream& out;
  /// Where to write the JSON report; "-" means standard output in place of the text.
  std::optional<std::string> json_path;
  bool timing = true;
};

struct DegreeRange {
  int first = 0;
  int last = -1;
  bool empty() const { return last < first; }
};

/// "a..b" with optional signs; a > b is an empty range.
DegreeRange parse_range(const std::string& text);

int cmd_tate(const std::string& fixture, const std::string& module, const DegreeRange& range, const Output& o);
int cmd_verify(const std::vector<std::string>& fixtures, const std::string& suite, unsigned jobs, const Output& o);
int cmd_duality(const std::string& fixture, const std::string& cocycle_file, const Output& o);
int cmd_snf(const std::string& matrix_file, const Output& o);
int cmd_export(const std::string& fixture, const std::optional<std::string>& path, std::ostream& out);
int cmd_fixtures(std::ostream& out);

/// Results for several fixtures using up to `jobs` threads; merged in fixture-then-suite order.
std::vector<SuiteResult> verify_fixtures(const std::vector<TorusFixture>& fixtures, const std::string& suite, unsigned jobs);

/// Serializes with a trailing newline; identical values give identical bytes.
std::string dump(const Json& j);

}  // namespace torusdual::cli
