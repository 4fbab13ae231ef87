#pragma once

#include <string>

namespace torusdual::cli {

enum class LogLevel { quiet, info, debug };

/// Parses "quiet", "info" or "debug"; throws std::invalid_argument otherwise.
LogLevel parse_log_level(const std::string& text);
/// Level from TORUSDUAL_LOG, overridden by the flag value when one is given.
LogLevel resolve_log_level(const std::string& flag);

void set_log_level(LogLevel level);
LogLevel log_level();
void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace torusdual::cli
