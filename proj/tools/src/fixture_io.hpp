#pragma once

#include "json.hpp"
#include "torusdual/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace torusdual::cli {

using Json = nlohmann::ordered_json;

inline constexpr int fixture_schema_version = 1;
inline constexpr int report_schema_version = 1;

/// Malformed input, annotated with a JSON pointer to the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : std::runtime_error((path.empty() ? "/" : path) + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Json fixture_to_json(const TorusFixture& fix);
TorusFixture fixture_from_json(const Json& j);

/// A built-in name, or a path to a fixture file.
TorusFixture load_fixture(const std::string& spec);
Json read_json_file(const std::string& path);

/// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j, const std::string& path);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& path);
/// "p/q" with 0 <= p < q reduced, or "0".
QmodZ fraction_from_json(const Json& j, const std::string& path);

}  // namespace torusdual::cli
